"""Exact matrix representations of small finite groups.

Matrices live over a fixed cyclotomic field; a representation stores a
full element-to-matrix map, built from generator matrices by spanning
tree when constructed that way.  Homomorphism property is verified on
the complete multiplication table for small domains and on a seeded
sample above the cap.  Character arithmetic (inner products,
restriction, conjugation, induction) is exact; the number of distinct
irreducible constituents of a representation is computed by the rank of
the span of its class-sum images, which needs no character table of
the ambient group.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction as Q
from math import isqrt
from typing import Mapping, Sequence

from .cyclotomic import Cyc, cyc_identity, cyc_matmul, cyc_rank, cyc_trace
from .finite_groups import FiniteGroup

_FULL_CHECK_CAP = 64
_SAMPLED_PAIRS = 500

Char = dict[int, Cyc]


@dataclass(frozen=True)
class Representation:
    group: FiniteGroup
    domain: tuple[int, ...]
    matrices: Mapping[int, list]
    conductor: int
    _char: dict = field(default_factory=dict, compare=False, repr=False)

    @staticmethod
    def from_generators(group: FiniteGroup, gens: Sequence[int],
                        mats: Sequence, conductor: int) -> "Representation":
        domain = group.closure(gens)
        dim = len(mats[0])
        full: dict[int, list] = {0: cyc_identity(dim, conductor)}
        gen_map = dict(zip(gens, [list(map(list, m)) for m in mats]))
        for elem, parent, g in group.generation_tree(list(gens)):
            full[elem] = cyc_matmul(full[parent], gen_map[g])
        rep = Representation(group, domain, full, conductor)
        rep._verify()
        return rep

    @staticmethod
    def from_matrices(group: FiniteGroup, domain: Sequence[int],
                      mats: Mapping[int, list], conductor: int,
                      verify: bool = True) -> "Representation":
        rep = Representation(group, tuple(sorted(domain)), dict(mats),
                             conductor)
        if verify:
            rep._verify()
        return rep

    @property
    def dim(self) -> int:
        return len(self.matrices[0])

    def matrix(self, g: int) -> list:
        return self.matrices[g]

    def _verify(self):
        dom = self.domain
        if set(dom) != set(self.matrices):
            raise ValueError("matrix map does not cover the domain")
        n = len(dom)
        if n <= _FULL_CHECK_CAP:
            pairs = [(a, b) for a in dom for b in dom]
        else:
            rng = random.Random(11)
            pairs = [(rng.choice(dom), rng.choice(dom))
                     for _ in range(_SAMPLED_PAIRS)]
        for a, b in pairs:
            if cyc_matmul(self.matrices[a], self.matrices[b]) \
                    != self.matrices[self.group.mul(a, b)]:
                raise ValueError(f"matrices are not a homomorphism at ({a},{b})")

    def character(self) -> Char:
        if not self._char:
            self._char.update({g: cyc_trace(m)
                               for g, m in self.matrices.items()})
        return self._char


# ---------------------------------------------------------------------------
# character arithmetic
# ---------------------------------------------------------------------------

def inner_product(chi1: Char, chi2: Char, subset: Sequence[int]) -> Q:
    """<chi1, chi2> over the subgroup; must come out rational."""
    m = next(iter(chi1.values())).m
    acc = Cyc.zero(m)
    for x in subset:
        acc = acc + chi1[x] * chi2[x].conjugate()
    return acc.to_fraction() / len(subset)


def conjugate_character(group: FiniteGroup, chi: Char, g: int) -> Char:
    """chi^g(x) = chi(g x g^{-1}), defined on g^{-1} (dom) g."""
    return {group.conj(group.inv(g), x): v for x, v in chi.items()}


def restrict_character(chi: Char, subset: Sequence[int]) -> Char:
    return {x: chi[x] for x in subset}


def char_key(chi: Char) -> tuple:
    return tuple(sorted((g, v.c) for g, v in chi.items()))


def is_irreducible(rep: Representation) -> bool:
    chi = rep.character()
    return inner_product(chi, chi, rep.domain) == 1


def induced_character(group: FiniteGroup, sub: Sequence[int], chi: Char,
                      ambient: Sequence[int] | None = None) -> Char:
    amb = tuple(ambient) if ambient is not None else tuple(range(group.order))
    sub_set = set(sub)
    m = next(iter(chi.values())).m
    out: Char = {}
    for g in amb:
        acc = Cyc.zero(m)
        for x in amb:
            y = group.conj(x, g)
            if y in sub_set:
                acc = acc + chi[y]
        out[g] = acc.scale(Q(1, len(sub)))
    return out


def induced_representation(group: FiniteGroup, sub: Sequence[int],
                           rep: Representation,
                           ambient: Sequence[int] | None = None
                           ) -> Representation:
    """Block-monomial model of Ind from the subgroup to the ambient
    subgroup (default: the whole group)."""
    amb = tuple(sorted(ambient)) if ambient is not None else tuple(range(group.order))
    sub_set = set(sub)
    reps = group.transversal(sub_set, amb)
    r, d = len(reps), rep.dim
    zero = Cyc.zero(rep.conductor)
    mats: dict[int, list] = {}
    for g in amb:
        big = [[zero for _ in range(r * d)] for _ in range(r * d)]
        for j, tj in enumerate(reps):
            target = group.mul(g, tj)
            for i, ti in enumerate(reps):
                h = group.mul(group.inv(ti), target)
                if h in sub_set:
                    block = rep.matrix(h)
                    for k in range(d):
                        for l in range(d):
                            big[i * d + k][j * d + l] = block[k][l]
                    break
            else:
                raise AssertionError("transversal does not cover")
        mats[g] = big
    return Representation.from_matrices(group, amb, mats, rep.conductor)


def constituent_count(rep: Representation, sub: Sequence[int]) -> int:
    """Number of distinct irreducible constituents of the restriction
    of rep to the subgroup: rank of the span of its class-sum images
    (class sums act by distinct central-character tuples)."""
    classes = rep.group.conjugacy_classes(tuple(sub))
    zero = Cyc.zero(rep.conductor)
    vecs = []
    for cls in classes:
        dim = rep.dim
        acc = [[zero for _ in range(dim)] for _ in range(dim)]
        for x in cls:
            mat = rep.matrix(x)
            for i in range(dim):
                row = mat[i]
                arow = acc[i]
                for j in range(dim):
                    if row[j]:
                        arow[j] = arow[j] + row[j]
        vecs.append([acc[i][j] for i in range(dim) for j in range(dim)])
    return cyc_rank(vecs)


def common_multiplicity(rep: Representation, sub: Sequence[int]) -> tuple[int, int]:
    """(m, k) for the restriction to a normal subgroup of the domain:
    k distinct constituents, all of multiplicity m.  Uses the identity
    <Res chi, Res chi> = m^2 k and the class-sum rank for k; the two
    routes must be consistent."""
    sub = tuple(sorted(sub))
    chi = restrict_character(rep.character(), sub)
    a = inner_product(chi, chi, sub)
    k = constituent_count(rep, sub)
    if a.denominator != 1 or a.numerator % k != 0:
        raise AssertionError("restriction is not multiplicity-homogeneous")
    m2 = a.numerator // k
    m = isqrt(m2)
    if m * m != m2:
        raise AssertionError("restriction is not multiplicity-homogeneous")
    return m, k
