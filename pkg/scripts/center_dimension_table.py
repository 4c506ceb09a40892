"""Tabulate truncated-center dimensions from two independent models.

For each datum and truncation radius, print the dimension of the
center of the lattice-presentation algebra (exact commutant kernel)
next to the number of dominant orbits, and for the residue-torus
model the three-way invariant dimension at small q.  The two columns
of the first table agree; the torus dimension at the trivial-character
block recovers the same dominant-orbit count.
"""
import argparse

from heckelab.iwahori_hecke import satake_check
from heckelab.root_datum import (
    cartan_matrix,
    datum_from_cartan,
    datum_general_linear,
)
from heckelab.torus_center import invariant_dimension, orbits

DATA = {
    "A1": datum_from_cartan(cartan_matrix("A", 1), label="A1"),
    "A2": datum_from_cartan(cartan_matrix("A", 2), label="A2"),
    "GL2": datum_general_linear(2),
    "B2": datum_from_cartan(cartan_matrix("B", 2), label="B2"),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-radius", type=int, default=2)
    ap.add_argument("--q", type=int, nargs="+", default=[2, 3])
    args = ap.parse_args()

    print(f"{'datum':6} {'radius':6} {'center dim':10} {'dominant orbits'}")
    for name, datum in DATA.items():
        for radius in range(args.max_radius + 1):
            rep = satake_check(datum, radius)
            status = "" if rep.ok else "  <- FAILED"
            print(f"{name:6} {radius:6d} {rep.center_dimension:10d} "
                  f"{len(rep.representatives):d}{status}")

    print(f"\n{'datum':6} {'q':3} {'radius':6} {'invariant dim':13} "
          f"{'orbits':6} {'trivial-character orbits'}")
    for name, datum in DATA.items():
        for q in args.q:
            for radius in range(args.max_radius + 1):
                orbs = orbits(datum, q, radius)
                trivial = sum(1 for o in orbs if o.orbit[0][1].is_trivial)
                dim = invariant_dimension(datum, q, radius)
                print(f"{name:6} {q:3d} {radius:6d} {dim:13d} "
                      f"{len(orbs):6d} {trivial:d}")


if __name__ == "__main__":
    main()
