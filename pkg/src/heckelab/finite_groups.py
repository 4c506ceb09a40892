"""Small finite groups as explicit multiplication tables.

Elements are integers 0..n-1 with 0 the identity.  Constructors for the
families used by the character-theory catalog (cyclic, dihedral,
generalized quaternion, Heisenberg mod p, direct products, permutation
closures) attach a coordinate list so callers can locate named
generators.  Closure and inverses are validated exactly; associativity
is spot-checked on seeded random triples.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

ASSOCIATIVITY_SAMPLES = 200


@dataclass(frozen=True)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]
    label: str = ""
    coords: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        n = len(self.table)
        idx = set(range(n))
        for row in self.table:
            if len(row) != n or set(row) != idx:
                raise ValueError("multiplication table is not a Latin square")
        for col in zip(*self.table):
            if set(col) != idx:
                raise ValueError("multiplication table is not a Latin square")
        if any(self.table[0][g] != g or self.table[g][0] != g for g in range(n)):
            raise ValueError("element 0 is not an identity")
        rng = random.Random(7)
        for _ in range(ASSOCIATIVITY_SAMPLES):
            a, b, c = (rng.randrange(n) for _ in range(3))
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise ValueError(f"associativity fails on ({a},{b},{c})")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.table[a].index(0)

    def conj(self, g: int, x: int) -> int:
        """g x g^{-1}"""
        return self.mul(self.mul(g, x), self.inv(g))

    def element_order(self, a: int) -> int:
        k, cur = 1, a
        while cur != 0:
            cur = self.mul(cur, a)
            k += 1
        return k

    def exponent(self, subset: Iterable[int] | None = None) -> int:
        out = 1
        for g in (subset if subset is not None else range(self.order)):
            o = self.element_order(g)
            out = out * o // gcd(out, o)
        return out

    def index_of(self, coord) -> int:
        return self.coords.index(coord)

    # subgroup machinery -------------------------------------------------
    def closure(self, gens: Iterable[int]) -> tuple[int, ...]:
        seen = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return tuple(sorted(seen))

    def generation_tree(self, gens: Sequence[int]) -> list[tuple[int, int, int]]:
        """Spanning tree of the closure: (element, parent, generator)
        triples in BFS order with element = parent * generator."""
        seen = {0}
        out = []
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        out.append((y, x, g))
                        nxt.append(y)
            frontier = nxt
        return out

    def is_subgroup(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return 0 in s and all(self.mul(a, b) in s for a in s for b in s)

    def is_normal(self, subset: Iterable[int],
                  ambient: Iterable[int] | None = None) -> bool:
        s = set(subset)
        amb = range(self.order) if ambient is None else ambient
        return all(self.conj(g, x) in s for g in amb for x in s)

    def centralizes(self, subset: Iterable[int]) -> bool:
        s = list(subset)
        return all(self.mul(a, b) == self.mul(b, a) for a in s for b in s)

    def conjugacy_classes(self, subset: Sequence[int] | None = None
                          ) -> list[tuple[int, ...]]:
        """Classes of the subgroup under its own conjugation."""
        elems = tuple(subset) if subset is not None else tuple(range(self.order))
        left = set(elems)
        out = []
        for x in sorted(elems):
            if x not in left:
                continue
            cls = {self.conj(g, x) for g in elems}
            out.append(tuple(sorted(cls)))
            left -= cls
        return out

    def transversal(self, subgroup: Iterable[int],
                    ambient: Iterable[int] | None = None) -> list[int]:
        """Minimal-index left coset representatives g*S."""
        s = set(subgroup)
        amb = sorted(range(self.order) if ambient is None else ambient)
        seen: set[int] = set()
        reps = []
        for g in amb:
            if g in seen:
                continue
            reps.append(g)
            seen |= {self.mul(g, x) for x in s}
        return reps

    def double_coset_reps(self, J: Iterable[int]) -> list[int]:
        s = sorted(J)
        seen: set[int] = set()
        reps = []
        for g in range(self.order):
            if g in seen:
                continue
            reps.append(g)
            seen |= {self.mul(self.mul(a, g), b) for a in s for b in s}
        return reps

    def commutator_subgroup(self) -> tuple[int, ...]:
        comms = {self.mul(self.mul(a, b),
                          self.inv(self.mul(b, a)))
                 for a in range(self.order) for b in range(self.order)}
        return self.closure(comms)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def _table_from_coords(coords: list, op, label: str) -> FiniteGroup:
    index = {c: i for i, c in enumerate(coords)}
    table = tuple(tuple(index[op(a, b)] for b in coords) for a in coords)
    return FiniteGroup(table, label, tuple(coords))


def cyclic(n: int) -> FiniteGroup:
    return _table_from_coords(list(range(n)), lambda a, b: (a + b) % n,
                              f"C{n}")


def dihedral(n: int) -> FiniteGroup:
    """Order 2n: coords (i, e) = r^i s^e with s r s = r^-1."""
    coords = [(i, e) for e in range(2) for i in range(n)]

    def op(a, b):
        i, e = a
        j, f = b
        return ((i + (j if e == 0 else -j)) % n, (e + f) % 2)

    return _table_from_coords(coords, op, f"D{2 * n}")


def quaternion(order: int) -> FiniteGroup:
    """Generalized quaternion of order 4m: a^(2m) = 1, b^2 = a^m,
    b a b^-1 = a^-1.  coords (i, j) = a^i b^j."""
    if order % 4 != 0 or order < 8:
        raise ValueError("order must be a multiple of 4, at least 8")
    m2 = order // 2
    coords = [(i, j) for j in range(2) for i in range(m2)]

    def op(a, b):
        i, e = a
        j, f = b
        i2 = (i + (j if e == 0 else -j)) % m2
        if e + f == 2:
            return ((i2 + m2 // 2) % m2, 0)
        return (i2, e + f)

    return _table_from_coords(coords, op, f"Q{order}")


def heisenberg(p: int) -> FiniteGroup:
    """Upper unitriangular 3x3 over Z/p: coords (a, b, c) with
    (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b')."""
    coords = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]

    def op(x, y):
        a, b, c = x
        d, e, f = y
        return ((a + d) % p, (b + e) % p, (c + f + a * e) % p)

    return _table_from_coords(coords, op, f"Heis{p}")


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    coords = [(a, b) for a in range(g1.order) for b in range(g2.order)]

    def op(x, y):
        return (g1.mul(x[0], y[0]), g2.mul(x[1], y[1]))

    grp = _table_from_coords(coords, op, f"{g1.label}x{g2.label}")
    return grp


def from_permutations(gens: Sequence[Sequence[int]], label: str = "") -> FiniteGroup:
    """Closure of permutation generators (tuples acting on 0..k-1)."""
    k = len(gens[0])
    ident = tuple(range(k))
    gens = [tuple(g) for g in gens]
    seen = {ident}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(x[g[i]] for i in range(k))
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    nxt.append(y)
        frontier = nxt
    return _table_from_coords(
        order, lambda a, b: tuple(a[b[i]] for i in range(k)),
        label or f"Perm{len(order)}")


# ---------------------------------------------------------------------------
# abelian quotient characters
# ---------------------------------------------------------------------------

def quotient_characters(group: FiniteGroup, big: Sequence[int],
                        small: Sequence[int]) -> tuple[int, list[dict[int, int]]]:
    """All homomorphisms big/small -> C^x, for small normal in big with
    abelian quotient.  Returns (e, chars): each char maps an element g
    of big to the exponent k of its value zeta_e^k."""
    big = tuple(sorted(big))
    small_set = set(small)
    if not group.is_subgroup(big) or not group.is_subgroup(small_set):
        raise ValueError("inputs must be subgroups")
    if not group.is_normal(small_set, big):
        raise ValueError("denominator is not normal in the numerator")

    # cosets, labeled by minimal representative
    coset_of: dict[int, int] = {}
    reps = []
    for g in big:
        if g in coset_of:
            continue
        members = {group.mul(g, s) for s in small_set}
        rep = min(members)
        for x in members:
            coset_of[x] = rep
        reps.append(rep)
    qmul = {(a, b): coset_of[group.mul(a, b)] for a in reps for b in reps}
    if any(qmul[a, b] != qmul[b, a] for a in reps for b in reps):
        raise ValueError("quotient is not abelian")

    # coset orders in the quotient
    def q_order(a: int) -> int:
        k, cur = 1, a
        while cur != coset_of[0]:
            cur = qmul[cur, a]
            k += 1
        return k

    e = 1
    for a in reps:
        o = q_order(a)
        e = e * o // gcd(e, o)

    # greedy generating set of the quotient
    gens: list[int] = []
    span = {coset_of[0]}
    for a in sorted(reps):
        if a in span:
            continue
        gens.append(a)
        frontier = list(span)
        while frontier:
            nxt = []
            for x in frontier:
                y = qmul[x, a]
                if y not in span:
                    span.add(y)
                    nxt.append(y)
            frontier = nxt
        if len(span) == len(reps):
            break

    chars: list[dict[int, int]] = []
    for assign in itertools.product(range(e), repeat=len(gens)):
        # extend multiplicatively; reject inconsistent assignments
        val = {coset_of[0]: 0}
        frontier = [coset_of[0]]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for g, a in zip(gens, assign):
                    y = qmul[x, g]
                    v = (val[x] + a) % e
                    if y in val:
                        if val[y] != v:
                            ok = False
                    else:
                        val[y] = v
                        nxt.append(y)
            frontier = nxt
        if not ok or len(val) != len(reps):
            continue
        # consistency on the full quotient table
        if all((val[qmul[a, b]] - val[a] - val[b]) % e == 0
               for a in reps for b in reps):
            chars.append({g: val[coset_of[g]] for g in big})
    assert len(chars) == len(reps), "character count must equal quotient order"
    return e, chars
