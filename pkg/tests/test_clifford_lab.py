"""Clifford-theory engine and its curated catalog.

Every catalog entry carries a full set of hand-derived expected values
(multiplicity, orbit size, inertia / stabilizer / twist-kernel orders,
twist count, both sides of the transfer and center checks, and the
three commutativity booleans).  The stabilizer subgroups for the
higher-multiplicity entries are pinned as explicit closures, derived
independently of the line-fixing search.
"""
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckelab.catalog import (
    build_catalog,
    catalog_from_json,
    catalog_to_json,
    evaluate_catalog,
    evaluate_entry,
    model_from_json,
    model_to_json,
)
from heckelab.clifford_lab import (
    FiniteGroupModel,
    check_hypotheses,
    clifford_report,
    inertia_subgroup,
    intertwining_reps,
    mackey_endomorphism_dimension,
    maximal_stabilizer,
    restrict_decompose,
    twist_group,
)
from heckelab.cyclotomic import Cyc
from heckelab.finite_groups import cyclic, dihedral
from heckelab.representations import (
    Representation,
    char_key,
    induced_character,
    induced_representation,
    inner_product,
    restrict_character,
)

MODELS = {m.name: m for m in build_catalog()}
_RESULTS: dict = {}


def _result(name):
    if name not in _RESULTS:
        _RESULTS[name] = evaluate_entry(MODELS[name])
    return _RESULTS[name]


# name -> (m, k, |inertia|, |stabilizer|, |dagger|, twist count,
#          (transfer over N, transfer over J), (constituents, dagger idx),
#          (normal-free, j-free, end-commutes))
EXPECTED = {
    "d8_rho2": (1, 2, 4, 4, 4, 2, (1, 1), (1, 1), (True, True, True)),
    "d8_klein": (1, 2, 4, 4, 4, 2, (1, 1), (1, 1), (True, True, True)),
    "q8_rho2": (2, 1, 8, 4, 2, 4, (2, 2), (1, 1), (False, False, False)),
    "q8_n_c4": (1, 2, 4, 4, 4, 2, (1, 1), (1, 1), (True, True, True)),
    "he3_z": (3, 1, 27, 9, 3, 9, (3, 3), (1, 1), (False, False, False)),
    "he3_n9": (1, 3, 9, 9, 9, 3, (1, 1), (1, 1), (True, True, True)),
    "d16_rho": (1, 2, 8, 8, 8, 2, (1, 1), (1, 1), (True, True, True)),
    "q16_rho": (1, 2, 8, 8, 8, 2, (1, 1), (1, 1), (True, True, True)),
    "q8xc3": (2, 1, 24, 12, 6, 4, (2, 2), (1, 1), (False, False, False)),
    "q8xd8": (2, 1, 32, 16, 8, 4, (2, 2), (1, 1), (False, False, False)),
    "c4_in_q8": (1, 1, 4, 4, 4, 1, (1, 1), (1, 1), (True, True, True)),
    "c6_triv": (1, 1, 6, 6, 6, 1, (1, 1), (1, 1), (True, True, True)),
    "d8_triv": (1, 1, 8, 8, 8, 1, (1, 1), (1, 1), (True, True, True)),
    "he3_sub": (1, 1, 9, 9, 9, 1, (1, 1), (1, 1), (True, True, True)),
    "c8_faithful": (1, 1, 8, 8, 8, 1, (1, 1), (4, 4), (True, True, True)),
    "d8q8_mixed": (2, 2, 32, 16, 8, 8, (2, 2), (1, 1),
                   (False, False, False)),
    "q8q8_tensor": (2, 1, 64, 32, 16, 4, (2, 2), (1, 1),
                    (False, False, False)),
}

SKIP_EXPECTED = {
    "skip_c4": ("induced representation is reducible",
                "intertwining of a restriction constituent escapes the "
                "inducing subgroup"),
    "skip_d8_center": ("intertwining of a restriction constituent escapes "
                       "the inducing subgroup",),
}


def test_catalog_size_and_order_bound():
    models = build_catalog()
    assert len(models) >= 12
    assert all(m.group.order <= 512 for m in models)
    assert len({m.name for m in models}) == len(models)


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_entry_oracle(name):
    m, k, n_int, n_st, n_dag, n_tw, tr, ce, booleans = EXPECTED[name]
    r = _result(name)
    c = r.clifford
    assert c.multiplicity == m
    assert c.orbit_size == k
    assert len(c.inertia) == n_int
    assert c.stabilizer is not None and len(c.stabilizer) == n_st
    assert len(c.dagger) == n_dag
    assert c.twist_order == n_tw
    assert r.transfer.status == "OK"
    assert (r.transfer.multiplicity_over_normal,
            r.transfer.multiplicity_over_j) == tr
    assert r.transfer.equal is True
    assert (r.center.constituent_count, r.center.dagger_index) == ce
    assert r.center.equal is True
    comm = r.commutativity
    assert (comm.normal_restriction_free, comm.j_restriction_free,
            comm.endomorphisms_commute) == booleans
    assert comm.coincide is True
    assert r.passed


@pytest.mark.parametrize("name", sorted(SKIP_EXPECTED))
def test_skipped_entries(name):
    r = _result(name)
    assert r.transfer.status == "SKIPPED"
    assert r.center.status == "SKIPPED"
    assert r.commutativity.status == "SKIPPED"
    assert r.transfer.failures == SKIP_EXPECTED[name]
    assert r.transfer.equal is None and r.center.equal is None
    assert r.commutativity.coincide is None
    assert r.passed  # a skip is an honest outcome, not a failure


def test_stabilizer_sets_match_independent_closures():
    # derived by hand: the largest subgroup of the inertia group whose
    # multiplicity-space lifts commute, tie-broken lexicographically
    cases = {
        "q8_rho2": [1],            # the <a> cyclic four-group
        "he3_z": [3, 1],           # <b, z>, the lex-least order-9 subgroup
        "q8xc3": [3, 1, 6],        # <a> x C3
        "q8xd8": [8, 1, 16],       # <a> x C4
        "d8q8_mixed": [8, 1, 2],   # rotations x <a>
        "q8q8_tensor": [8, 32, 2, 1],  # Q8 x <a>
    }
    for name, gens in cases.items():
        model = MODELS[name]
        expect = model.group.closure(gens)
        assert _result(name).clifford.stabilizer == expect, name


def test_stabilizer_index_ladder():
    # on every entry where the stabilizer is computed, the inertia,
    # stabilizer, and twist-kernel orders form a geometric ladder with
    # ratio equal to the common multiplicity
    for name in EXPECTED:
        c = _result(name).clifford
        assert len(c.inertia) == c.multiplicity * len(c.stabilizer)
        assert len(c.stabilizer) == c.multiplicity * len(c.dagger)


def test_dimension_identity():
    # dim(big) = orbit size x multiplicity x dim(constituent)
    for name, m in MODELS.items():
        c = _result(name).clifford
        assert m.rho_tilde.dim == c.orbit_size * c.multiplicity * m.rho.dim


def test_twist_count_equals_kernel_index():
    for name, m in MODELS.items():
        c = _result(name).clifford
        assert c.twist_order * len(c.dagger) == len(m.j_tilde)


def test_dagger_contains_j_and_sits_in_inertia_ladder():
    for name, m in MODELS.items():
        c = _result(name).clifford
        assert set(m.j) <= set(c.dagger) <= set(c.stabilizer or c.dagger)
        assert set(c.dagger) <= set(c.inertia) <= set(m.j_tilde)


def test_frobenius_reciprocity_per_entry():
    # multiplicity of rho in the restriction equals the multiplicity of
    # rho_tilde in the induction, and both equal the reported m
    for name in ("d8_rho2", "q8_rho2", "he3_n9", "c8_faithful", "q8xd8"):
        model = MODELS[name]
        g = model.group
        jt = tuple(sorted(model.j_tilde))
        chi_t = model.rho_tilde.character()
        chi_r = model.rho.character()
        res_side = inner_product(restrict_character(chi_t, model.j),
                                 chi_r, model.j)
        ind = induced_character(g, model.j, chi_r, jt)
        ind_side = inner_product(ind, chi_t, jt)
        assert res_side == ind_side == _result(name).clifford.multiplicity


def test_mackey_route_matches_character_norm():
    for name in ("q8_rho2", "c8_faithful", "he3_sub", "d8_rho2"):
        model = MODELS[name]
        dim_end = mackey_endomorphism_dimension(model.group, model.j,
                                                model.rho.character())
        ind = induced_representation(model.group, model.j, model.rho)
        chi = ind.character()
        assert dim_end == inner_product(chi, chi, ind.domain)


def test_restriction_orbit_rebuilds_character():
    model = MODELS["d8q8_mixed"]
    rep = restrict_decompose(model.group, model.j, model.rho_tilde,
                             constituent=model.rho.character())
    assert rep.multiplicity == 2 and rep.orbit_size == 2
    assert rep.orbit is not None and len(rep.orbit) == 2
    chi = model.rho_tilde.character()
    for x in model.j:
        total = Cyc.zero(4)
        for cc in rep.orbit:
            total = total + cc[x]
        assert total.scale(2) == chi[x]
    keys = {char_key(cc) for cc in rep.orbit}
    assert char_key(model.rho.character()) in keys


def test_restrict_decompose_rejects_reducible():
    g = dihedral(4)
    one = Cyc.one(4)
    zero = Cyc.zero(4)
    mats = {h: [[one, zero], [zero, (one if h in (0, 1, 2, 3) else -one)]]
            for h in range(8)}
    rep = Representation.from_matrices(g, tuple(range(8)), mats, 4)
    with pytest.raises(ValueError, match="reducible"):
        restrict_decompose(g, (0, 1, 2, 3), rep)


def test_restrict_decompose_rejects_non_normal():
    model = MODELS["d8_rho2"]
    with pytest.raises(ValueError, match="normal"):
        restrict_decompose(model.group, (0, 4), model.rho_tilde)


def test_twist_group_rejects_small_conductor():
    c6 = cyclic(6)
    rep = Representation.from_generators(
        c6, [1], [[[Cyc.rational(4, -1)]]], 4)
    with pytest.raises(ValueError, match="conductor"):
        twist_group(c6, tuple(range(6)), (0, 3), rep)


def test_twist_group_on_faithful_character_is_trivial():
    model = MODELS["c8_faithful"]
    tw = twist_group(model.group, tuple(range(8)), (0, 4), model.rho_tilde)
    assert tw.order == 1
    assert tw.exponent == 4          # the quotient is cyclic of order 4
    assert tw.dagger == tuple(range(8))


def test_inertia_oracle():
    model = MODELS["d8_klein"]
    inert = inertia_subgroup(model.group, tuple(range(8)), model.j,
                             model.rho.character())
    assert inert == (0, 2, 4, 6)


def test_intertwining_set_escapes_for_central_character():
    model = MODELS["skip_d8_center"]
    reps = intertwining_reps(model.group, model.j, model.rho.character())
    assert any(r not in set(model.j_tilde) for r in reps)


def test_intertwining_set_stays_inside_for_regular_orbit():
    model = MODELS["c4_in_q8"]
    reps = intertwining_reps(model.group, model.j, model.rho.character())
    assert set(reps) <= set(model.j_tilde)


def test_check_hypotheses_reports_pi():
    model = MODELS["he3_sub"]
    hyp, pi = check_hypotheses(model)
    assert hyp.ok and hyp.failures == ()
    assert pi.dim == 3
    assert inner_product(pi.character(), pi.character(), pi.domain) == 1


def test_maximal_stabilizer_m1_shortcut():
    model = MODELS["d16_rho"]
    c = _result("d16_rho").clifford
    stab = maximal_stabilizer(model.group, model.j, model.rho_tilde,
                              model.rho, c.dagger, c.inertia)
    assert stab == c.inertia


def test_model_validation_rejects_bad_inputs():
    good = MODELS["d8_rho2"]
    bad = FiniteGroupModel("bad", good.group, (0, 4), good.j_tilde,
                           good.rho_tilde, good.rho)
    with pytest.raises(ValueError, match="normal"):
        bad.validate()
    bad2 = FiniteGroupModel("bad2", good.group, good.normal, (0, 1, 2, 3),
                            good.rho_tilde, good.rho)
    with pytest.raises(ValueError, match="inducing"):
        bad2.validate()


# ---------------------------------------------------------------------------
# JSON interface
# ---------------------------------------------------------------------------

def test_json_roundtrip_preserves_reports():
    for name in ("d8_rho2", "q8_rho2", "he3_sub"):
        model = MODELS[name]
        back = model_from_json(json.loads(json.dumps(model_to_json(model))))
        assert back.name == model.name
        assert back.normal == model.normal and back.j_tilde == model.j_tilde
        assert clifford_report(back) == _result(name).clifford


def test_catalog_roundtrip_names():
    data = catalog_to_json(build_catalog())
    names = [e["name"] for e in data["entries"]]
    back = catalog_from_json(data)
    assert [m.name for m in back] == names


def test_json_rejects_bad_payloads():
    data = model_to_json(MODELS["d8_rho2"])
    broken = json.loads(json.dumps(data))
    broken["rho"]["matrices"][0][0][0] = ["1"]   # wrong coefficient length
    with pytest.raises(ValueError, match="wrong length"):
        model_from_json(broken)
    no_group = json.loads(json.dumps(data))
    no_group["group"] = {"label": "nope"}
    with pytest.raises(ValueError, match="table or permutation"):
        model_from_json(no_group)


def test_permutation_group_input():
    # a single 4-cycle closes to C4 with index = exponent, so the JSON
    # below is a complete hand-written entry over a permutation group
    zeta = ["0", "1"]   # the primitive fourth root in the power basis
    data = {
        "name": "c4_json",
        "group": {"permutations": [[1, 2, 3, 0]]},
        "normal": [0, 1, 2, 3],
        "j_tilde": [0, 1, 2, 3],
        "conductor": 4,
        "rho_tilde": {"generators": [1], "matrices": [[[zeta]]]},
        "rho": {"generators": [1], "matrices": [[[zeta]]]},
    }
    model = model_from_json(data)
    rep = clifford_report(model)
    assert rep.multiplicity == 1 and rep.orbit_size == 1
    assert rep.inertia == (0, 1, 2, 3)
    assert rep.stabilizer == (0, 1, 2, 3)
    assert rep.dagger == (0, 1, 2, 3) and rep.twist_order == 1
    chi = model.rho_tilde.character()
    assert chi[1] == Cyc.zeta(4) and chi[2] == -Cyc.one(4)


# ---------------------------------------------------------------------------
# evaluation driver
# ---------------------------------------------------------------------------

def test_evaluate_catalog_order_and_jobs():
    light = [MODELS[n] for n in
             ("d8_rho2", "q8_rho2", "skip_c4", "c8_faithful", "he3_n9")]
    seq = evaluate_catalog(light, jobs=1)
    par = evaluate_catalog(light, jobs=3)
    assert [r.name for r in seq] == [m.name for m in light]
    assert [r.to_dict() for r in seq] == [r.to_dict() for r in par]


def test_entry_result_to_dict_shape():
    d = _result("q8_rho2").to_dict()
    assert d["multiplicity"] == 2 and d["stabilizer_order"] == 4
    assert d["transfer"]["status"] == "OK"
    assert d["passed"] is True
    d = _result("skip_c4").to_dict()
    assert d["transfer"]["status"] == "SKIPPED"
    assert d["transfer"]["failures"]


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------

_LIGHT = ["d8_rho2", "d8_klein", "q8_rho2", "q8_n_c4", "c4_in_q8",
          "c6_triv", "d8_triv", "c8_faithful", "skip_c4", "skip_d8_center"]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(_LIGHT), st.data())
def test_conjugate_constituent_stays_in_orbit(name, data):
    model = MODELS[name]
    g = data.draw(st.sampled_from(sorted(model.j_tilde)))
    rep = restrict_decompose(model.group, model.j, model.rho_tilde,
                             constituent=model.rho.character())
    chi = model.rho.character()
    moved = {x: chi[model.group.conj(g, x)] for x in model.j}
    assert char_key(moved) in {char_key(c) for c in rep.orbit}


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(_LIGHT))
def test_twists_form_a_group(name):
    model = MODELS[name]
    tw = twist_group(model.group, tuple(sorted(model.j_tilde)), model.j,
                     model.rho_tilde)
    e = tw.exponent
    keys = {tuple(sorted(t.items())) for t in tw.twists}
    for t1 in tw.twists:
        for t2 in tw.twists:
            prod = {g: (t1[g] + t2[g]) % e for g in t1}
            assert tuple(sorted(prod.items())) in keys


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(_LIGHT), st.data())
def test_inertia_is_closed_under_product(name, data):
    model = MODELS[name]
    c = _result(name).clifford
    a = data.draw(st.sampled_from(c.inertia))
    b = data.draw(st.sampled_from(c.inertia))
    assert model.group.mul(a, b) in set(c.inertia)
