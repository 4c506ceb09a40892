"""Exact matrix representations: characters, induction, and
multiplicity extraction.

The induction tests run two independent routes (the induced-character
formula versus the literal trace of the block-monomial induced
matrices) and require exact agreement.
"""
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckelab.cyclotomic import Cyc, cyc_trace
from heckelab.finite_groups import cyclic, dihedral, quaternion
from heckelab.representations import (
    Representation,
    char_key,
    common_multiplicity,
    conjugate_character,
    constituent_count,
    induced_character,
    induced_representation,
    inner_product,
    is_irreducible,
    restrict_character,
)

D8 = dihedral(4)
Q8 = quaternion(8)


def _cm(cond, rows):
    return [[Cyc.rational(cond, Q(x)) for x in row] for row in rows]


def _d8_two_dim() -> Representation:
    return Representation.from_generators(
        D8, [1, 4], [_cm(4, [[0, -1], [1, 0]]), _cm(4, [[1, 0], [0, -1]])], 4)


def _q8_two_dim() -> Representation:
    i4 = Cyc.zeta(4)
    a = [[i4, Cyc.zero(4)], [Cyc.zero(4), -i4]]
    return Representation.from_generators(
        Q8, [1, 4], [a, _cm(4, [[0, -1], [1, 0]])], 4)


def test_character_oracle_dihedral():
    chi = _d8_two_dim().character()
    two = Cyc.rational(4, 2)
    assert chi[0] == two and chi[2] == -two
    for g in (1, 3, 4, 5, 6, 7):
        assert chi[g] == Cyc.zero(4)


def test_character_oracle_quaternion():
    chi = _q8_two_dim().character()
    assert chi[0] == Cyc.rational(4, 2) and chi[2] == Cyc.rational(4, -2)
    for g in (1, 3, 4, 5, 6, 7):
        assert chi[g] == Cyc.zero(4)


def test_bad_homomorphism_rejected():
    with pytest.raises(ValueError, match="homomorphism"):
        Representation.from_generators(D8, [1, 4],
                                       [_cm(4, [[1, 0], [0, 1]]),
                                        _cm(4, [[0, 1], [1, 1]])], 4)


def test_irreducibility():
    rep = _d8_two_dim()
    assert is_irreducible(rep)
    assert inner_product(rep.character(), rep.character(), rep.domain) == 1
    triv = Representation.from_generators(D8, [1, 4],
                                          [_cm(4, [[1]]), _cm(4, [[1]])], 4)
    assert is_irreducible(triv)
    reg = induced_representation(
        D8, (0,), Representation.from_matrices(D8, (0,),
                                               {0: _cm(4, [[1]])}, 4))
    assert not is_irreducible(reg)
    # regular representation: <chi, chi> = |G|, five distinct constituents
    chi = reg.character()
    assert inner_product(chi, chi, reg.domain) == 8
    assert constituent_count(reg, range(8)) == 5


def test_conjugate_character_is_action():
    rep = _d8_two_dim()
    chi = restrict_character(rep.character(), (0, 1, 2, 3))
    moved = conjugate_character(D8, chi, 4)
    assert set(moved) == {0, 1, 2, 3}
    # conjugating twice by an involution returns the original
    assert char_key(conjugate_character(D8, moved, 4)) == char_key(chi)


def test_induced_character_two_routes():
    # Ind from C4 to D8 of the faithful character
    chi = {0: Cyc.one(4), 1: Cyc.zeta(4),
           2: Cyc.rational(4, -1), 3: -Cyc.zeta(4)}
    sub_rep = Representation.from_generators(D8, [1], [[[Cyc.zeta(4)]]], 4)
    ind_rep = induced_representation(D8, (0, 1, 2, 3), sub_rep)
    formula = induced_character(D8, (0, 1, 2, 3), chi)
    for g in range(8):
        assert formula[g] == cyc_trace(ind_rep.matrix(g))
    # and it is the irreducible two-dimensional character
    assert char_key(formula) == char_key(_d8_two_dim().character())


def test_induced_representation_from_central_character():
    sgn = Representation.from_matrices(
        Q8, (0, 2), {0: _cm(4, [[1]]), 2: _cm(4, [[-1]])}, 4)
    ind = induced_representation(Q8, (0, 2), sgn)
    assert ind.dim == 4
    chi = ind.character()
    formula = induced_character(Q8, (0, 2), sgn.character())
    for g in range(8):
        assert chi[g] == formula[g]
    # Ind = 2 x (two-dimensional irreducible)
    assert inner_product(chi, chi, range(8)) == 4
    assert constituent_count(ind, range(8)) == 1
    two_dim = _q8_two_dim()
    assert inner_product(chi, two_dim.character(), range(8)) == 2


def test_frobenius_reciprocity():
    sub = (0, 1, 2, 3)
    chi_sub = {0: Cyc.one(4), 1: Cyc.zeta(4),
               2: Cyc.rational(4, -1), 3: -Cyc.zeta(4)}
    big = _d8_two_dim().character()
    lhs = inner_product(induced_character(D8, sub, chi_sub), big, range(8))
    rhs = inner_product(chi_sub, restrict_character(big, sub), sub)
    assert lhs == rhs == 1


def test_common_multiplicity_oracles():
    rep = _q8_two_dim()
    # restriction to the center: 2 x sgn
    assert common_multiplicity(rep, (0, 2)) == (2, 1)
    # restriction to a cyclic four-subgroup: two distinct characters
    assert common_multiplicity(rep, (0, 1, 2, 3)) == (1, 2)
    d8 = _d8_two_dim()
    assert common_multiplicity(d8, (0, 2, 4, 6)) == (1, 2)
    assert common_multiplicity(d8, (0, 2)) == (2, 1)


def test_common_multiplicity_rejects_inhomogeneous():
    # restriction of the regular representation of C6 to C2 is
    # 3 x triv + 3 x sgn: homogeneous; use a hand-built inhomogeneous one
    c6 = cyclic(6)
    z6 = Cyc.zeta(6)
    # triv + faithful: restriction to C2 = triv + sgn with k=2, m=1: fine
    # triv + triv + faithful gives multiplicities 2 and 1: must raise
    mats = {}
    for g in range(6):
        zz = Cyc.one(6)
        for _ in range(g):
            zz = zz * z6
        mats[g] = [[Cyc.one(6), Cyc.zero(6), Cyc.zero(6)],
                   [Cyc.zero(6), Cyc.one(6), Cyc.zero(6)],
                   [Cyc.zero(6), Cyc.zero(6), zz]]
    rep = Representation.from_matrices(c6, tuple(range(6)), mats, 6)
    with pytest.raises(AssertionError, match="homogeneous"):
        common_multiplicity(rep, (0, 3))


def test_constituent_count_of_restriction():
    rep = _d8_two_dim()
    assert constituent_count(rep, (0, 1, 2, 3)) == 2
    assert constituent_count(rep, (0, 2)) == 1
    assert constituent_count(rep, (0,)) == 1


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(st.integers(0, 7), st.integers(0, 7))
def test_characters_are_class_functions(g, x):
    chi = _d8_two_dim().character()
    assert chi[D8.conj(g, x)] == chi[x]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 7))
def test_conjugation_preserves_inner_products(g):
    rep = _q8_two_dim()
    chi = restrict_character(rep.character(), (0, 1, 2, 3))
    moved = conjugate_character(Q8, chi, g)
    assert set(moved) == {0, 1, 2, 3}
    assert inner_product(moved, moved, (0, 1, 2, 3)) \
        == inner_product(chi, chi, (0, 1, 2, 3))
