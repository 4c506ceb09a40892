"""Walk the rank-three wall-point counterexample end to end.

Builds the depth-one filtration group at x = (1/2, 0, 0), conjugates it
by the coordinate swap, intersects both with the (1|2)-block Levi, and
prints the valuation matrices, the symbolic indices, and exact point
counts over Z/p^2.  The two block groups have different volumes, which
rules out conjugacy inside the Levi.
"""
import argparse
from fractions import Fraction as Q

from heckelab.apartment import filtration_profile, heart_condition1_check
from heckelab.padic_groups import (
    block_of,
    brute_point_count,
    conjugacy_obstruction,
    conjugate_by_permutation,
    from_filtration,
    intersect_levi,
    iwahori_scheme,
    log_volume,
    point_count,
)
from heckelab.root_datum import WeylGroup, datum_general_linear


def show(title: str, scheme) -> None:
    print(f"{title}:")
    for row in scheme.bounds:
        print("   ", " ".join(" ." if b is None else f"{b:2d}" for b in row))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3],
                    help="residue characteristics for the exact counts")
    args = ap.parse_args()

    datum = datum_general_linear(3)
    group = WeylGroup(datum)
    x = (Q(1, 2), Q(0), Q(0))
    r = Q(1)

    base = from_filtration(filtration_profile(datum, x, r))
    show("filtration group at x", base)
    swapped = conjugate_by_permutation(base, (1, 0, 2))
    show("conjugate by the (0 1) swap", swapped)

    blocks = ((0,), (1, 2))
    levi = block_of(intersect_levi(base, blocks), (1, 2))
    conj = block_of(intersect_levi(swapped, blocks), (1, 2))
    show("2x2 Levi block of the group", levi)
    show("2x2 Levi block of the conjugate", conj)

    iwahori = iwahori_scheme(2)
    print("index in the 2x2 standard parahoric:",
          log_volume(levi, iwahori), "vs", log_volume(conj, iwahori))
    for p in args.primes:
        whole = point_count(iwahori, p, 2)
        assert whole == brute_point_count(iwahori, p, 2)
        print(f"  p={p}: {whole} points split "
              f"{whole // brute_point_count(levi, p, 2)} : "
              f"{whole // brute_point_count(conj, p, 2)}")
    print("conjugacy obstruction:", conjugacy_obstruction(levi, conj))

    verdict = heart_condition1_check(datum, group, x, r, (1,))
    w = verdict.witnesses[0]
    print(f"threshold mismatch ({verdict.status}): root {w.root} jumps at "
          f"{w.threshold_at_x} here but {w.threshold_at_image} at the image")
    print(f"verdict: G_{{x,{r}}} ∉ K^♥(S,G)")


if __name__ == "__main__":
    main()
