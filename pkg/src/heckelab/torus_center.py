"""Torus-side model of a depth-one Hecke algebra center.

The commutative algebra attached to a maximal split torus is spanned by
monomials indexed by pairs (coweight, residue character): the coweight
records a lattice translation, the character a homomorphism from the
depth-zero residue torus through a fixed generator of the residue
field's unit group.  The finite Weyl group acts on both factors at
once; the invariant subalgebra has the orbit sums as a basis.  All
computations here are exact: integer lattice points, exponent tuples
mod q - 1, and rational linear algebra for the independent dimension
routes.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Sequence

from .cyclotomic import Cyc, cyc_rank
from .root_datum import RootDatum, WeylElement, WeylGroup


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return q == 1


def _matvec(mat: Sequence[Sequence[int]], vec: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(row[c] * vec[c] for c in range(len(vec))) for row in mat)


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ResidueCharacter:
    """Character of the depth-zero residue torus: one exponent per
    cocharacter-basis vector, each read mod q - 1 through a fixed
    generator of the residue unit group.  Depth one only."""
    components: tuple[int, ...]
    q: int
    n: int = 1

    def __post_init__(self) -> None:
        if not _is_prime_power(self.q):
            raise ValueError("q must be a prime power >= 2")
        if self.n < 1:
            raise ValueError("depth must be a positive integer")
        object.__setattr__(self, "components",
                           tuple(c % (self.q - 1) for c in self.components))

    @property
    def is_trivial(self) -> bool:
        return not any(self.components)


Pair = tuple[tuple[int, ...], ResidueCharacter]


@dataclass(frozen=True)
class MonomialElement:
    """Basis monomial: a lattice translation times a residue character."""
    coweight: tuple[int, ...]
    character: ResidueCharacter
    coefficient: Q = Q(1)


@dataclass(frozen=True)
class OrbitSum:
    """A full Weyl orbit of pairs and its unit-coefficient formal sum."""
    orbit: tuple[Pair, ...]
    element: tuple[MonomialElement, ...]


def _pair_key(pair: Pair):
    lam, chi = pair
    return (lam, chi.components)


def _orbit_sum(pairs) -> OrbitSum:
    orbit = tuple(sorted(pairs, key=_pair_key))
    return OrbitSum(orbit, tuple(MonomialElement(lam, chi)
                                 for lam, chi in orbit))


# ---------------------------------------------------------------------------
# the Weyl action on pairs
# ---------------------------------------------------------------------------

def weyl_act_pair(w: WeylElement, pair: Pair) -> Pair:
    """Simultaneous action: the coweight moves by the cocharacter
    matrix, the exponent tuple by the character matrix.  The character
    matrix is the transpose-inverse of the cocharacter action, so this
    is precomposition of the character with the inverse element."""
    lam, chi = pair
    moved = _matvec(w.cochar_mat, lam)
    comps = _matvec(w.char_mat, chi.components)
    return moved, ResidueCharacter(comps, chi.q, chi.n)


def enumerate_characters(datum: RootDatum, q: int, n: int = 1
                         ) -> list[ResidueCharacter]:
    """All (q-1)^rank residue characters, in lexicographic exponent
    order.  Depth n > 1 would need finer unit filtrations and is left
    as an extension point."""
    if n != 1:
        raise NotImplementedError("depth above one is not supported")
    rank = datum.ambient_rank
    return [ResidueCharacter(c, q, 1)
            for c in itertools.product(range(q - 1), repeat=rank)]


def _full_orbit(group: WeylGroup, pair: Pair) -> set[Pair]:
    # closure under the simple reflections; orbits are finite, so this
    # terminates even when members leave any given coordinate box
    seen = {pair}
    frontier = [pair]
    gens = [group.simple_reflection(i) for i in range(len(group.datum.simple))]
    while frontier:
        nxt = []
        for p in frontier:
            for s in gens:
                moved = weyl_act_pair(s, p)
                if moved not in seen:
                    seen.add(moved)
                    nxt.append(moved)
        frontier = nxt
    return seen


def orbits(datum: RootDatum, q: int, radius: int) -> list[OrbitSum]:
    """All orbits meeting the sup-norm box of the given radius.  Each
    orbit is completed even past the box: truncation selects which
    orbits appear, it never clips one."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    group = WeylGroup(datum)
    chars = enumerate_characters(datum, q)
    gens = [group.simple_reflection(i) for i in range(len(datum.simple))]
    out: list[OrbitSum] = []
    seen: set[Pair] = set()
    for lam in itertools.product(range(-radius, radius + 1),
                                 repeat=datum.ambient_rank):
        for chi in chars:
            pair = (lam, chi)
            if pair in seen:
                continue
            orb = _full_orbit(group, pair)
            seen |= orb
            for p in orb:
                for s in gens:
                    assert weyl_act_pair(s, p) in orb, "orbit not closed"
            out.append(_orbit_sum(orb))
    out.sort(key=lambda o: _pair_key(o.orbit[0]))
    return out


def _stabilizer(group: WeylGroup, chi: ResidueCharacter) -> list[WeylElement]:
    zero = (0,) * len(chi.components)
    out = [w for w in group.elements
           if weyl_act_pair(w, (zero, chi))[1] == chi]
    members = set(out)
    for a in out:
        for b in out:
            assert group.mul(a, b) in members, "stabilizer is not closed"
    return out


def stabilizer_Wchi(datum: RootDatum, chi: ResidueCharacter
                    ) -> list[WeylElement]:
    """Subgroup of the finite Weyl group fixing the residue character;
    closure under composition is asserted."""
    return _stabilizer(WeylGroup(datum), chi)


# ---------------------------------------------------------------------------
# block decomposition of an orbit sum by residue character
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RocReport:
    """Decomposition of one orbit sum into character blocks: each block
    must be a single orbit of that character's stabilizer, the blocks
    must rebuild the sum, and each block sum must be stabilizer-fixed."""
    ok: bool
    failures: tuple[str, ...]
    block_characters: tuple[ResidueCharacter, ...]
    block_sizes: tuple[int, ...]


def roc_decomposition_check(datum: RootDatum, q: int, osum: OrbitSum
                            ) -> RocReport:
    group = WeylGroup(datum)
    members = set(osum.orbit)
    if not members:
        raise ValueError("empty orbit")
    if _full_orbit(group, osum.orbit[0]) != members:
        raise ValueError("input is not a single orbit")
    failures: list[str] = []
    if (tuple((m.coweight, m.character) for m in osum.element) != osum.orbit
            or any(m.coefficient != 1 for m in osum.element)):
        failures.append("formal sum is not the unit-coefficient orbit sum")

    blocks: dict[ResidueCharacter, set[tuple[int, ...]]] = {}
    for lam, chi in members:
        blocks.setdefault(chi, set()).add(lam)

    # the characters that appear must form one orbit of the group
    zero = (0,) * datum.ambient_rank
    char_orbit = {p[1] for p in _full_orbit(group, (zero, osum.orbit[0][1]))}
    if set(blocks) != char_orbit:
        failures.append("character blocks do not form a single group orbit")

    for chi in sorted(blocks, key=lambda c: c.components):
        lams = blocks[chi]
        stab = _stabilizer(group, chi)
        seed = min(lams)
        reached = {_matvec(w.cochar_mat, seed) for w in stab}
        if reached != lams:
            failures.append(
                f"block {chi.components}: stabilizer orbit of {seed} has "
                f"{len(reached)} members, the block has {len(lams)}")
        for w in stab:
            if {weyl_act_pair(w, (lam, chi)) for lam in lams} != {
                    (lam, chi) for lam in lams}:
                failures.append(
                    f"block {chi.components}: sum is not fixed by {w!r}")
                break

    rebuilt = sorted(((lam, chi) for chi in blocks for lam in blocks[chi]),
                     key=_pair_key)
    if tuple(rebuilt) != osum.orbit:
        failures.append("block sums do not add up to the orbit sum")

    chars = tuple(sorted(blocks, key=lambda c: c.components))
    return RocReport(not failures, tuple(failures), chars,
                     tuple(len(blocks[c]) for c in chars))


# ---------------------------------------------------------------------------
# dimension of the truncated invariant space, three independent ways
# ---------------------------------------------------------------------------

def invariant_dimension(datum: RootDatum, q: int, radius: int) -> int:
    """Number of orbits meeting the truncation box.  Cross-checked
    against the kernel dimension of the stacked (w - 1) actions on the
    orbit-closed monomial span, and against the Burnside average of
    fixed pairs; the three counts must agree exactly."""
    orbs = orbits(datum, q, radius)
    count = len(orbs)

    group = WeylGroup(datum)
    basis = sorted({p for o in orbs for p in o.orbit}, key=_pair_key)
    index = {p: i for i, p in enumerate(basis)}
    npairs = len(basis)

    one, zero = Cyc.one(1), Cyc.zero(1)
    rows: list[list[Cyc]] = []
    for i in range(len(datum.simple)):
        s = group.simple_reflection(i)
        for src, p in enumerate(basis):
            dst = index[weyl_act_pair(s, p)]
            if dst == src:
                continue
            row = [zero] * npairs
            row[dst] = one
            row[src] = -one
            rows.append(row)
    kernel_dim = npairs - (cyc_rank(rows) if rows else 0)

    fixed_total = sum(1 for w in group.elements for p in basis
                      if weyl_act_pair(w, p) == p)
    burnside, rem = divmod(fixed_total, len(group))
    if rem:
        raise AssertionError("fixed-pair total not divisible by group order")
    if not (count == kernel_dim == burnside):
        raise AssertionError(
            f"orbit count {count}, kernel dimension {kernel_dim}, and "
            f"Burnside count {burnside} disagree")
    return count
