"""Curated catalog of finite-group models for the Clifford-theory lab.

Each entry fixes a group G, a normal subgroup N with abelian quotient,
an inducing subgroup Jt carrying an irreducible representation, and an
irreducible summand of its restriction to J = Jt ∩ N.  The entries are
chosen to cover every code path: multiplicity 1 and higher, orbit size
1 and higher, inducing subgroups both equal to and smaller than G,
trivial and nontrivial twist groups, constituents of dimension above 1,
and models that fail the hypotheses of the conditional checks (those
must come out SKIPPED, not wrong).

Entries serialize to JSON: groups as multiplication tables (permutation
generators are also accepted on input), subgroups as element lists,
matrices as row-major lists of cyclotomic coefficient vectors.
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction as Q

from .clifford_lab import (
    CenterReport,
    CliffordReport,
    CommutativityReport,
    FiniteGroupModel,
    TransferReport,
    center_dimension_check,
    clifford_report,
    commutativity_check,
    multiplicity_transfer_check,
)
from .cyclotomic import Cyc
from .finite_groups import (
    FiniteGroup,
    cyclic,
    dihedral,
    direct_product,
    from_permutations,
    heisenberg,
    quaternion,
)
from .representations import Representation


# ---------------------------------------------------------------------------
# matrix helpers
# ---------------------------------------------------------------------------

def _cmat(cond: int, rows) -> list:
    return [[e if isinstance(e, Cyc) else Cyc.rational(cond, Q(e))
             for e in row] for row in rows]


def _kron(a: list, b: list) -> list:
    n, m = len(a), len(b)
    return [[a[i][j] * b[k][l] for j in range(n) for l in range(m)]
            for i in range(n) for k in range(m)]


def _rep(group: FiniteGroup, gens: list[int], mats: list, cond: int
         ) -> Representation:
    return Representation.from_generators(group, gens, mats, cond)


# two-dimensional building blocks, conductor 4
def _d8_two_dim(cond: int = 4) -> tuple[list, list]:
    rot = _cmat(cond, [[0, -1], [1, 0]])
    ref = _cmat(cond, [[1, 0], [0, -1]])
    return rot, ref


def _q8_two_dim(cond: int = 4) -> tuple[list, list]:
    i4 = Cyc.zeta(cond, cond // 4)
    a = [[i4, Cyc.zero(cond)], [Cyc.zero(cond), -i4]]
    b = _cmat(cond, [[0, -1], [1, 0]])
    return a, b


# ---------------------------------------------------------------------------
# entry builders
# ---------------------------------------------------------------------------

def _d8_rho2() -> FiniteGroupModel:
    g = dihedral(4)
    rot, ref = _d8_two_dim()
    rho_t = _rep(g, [1, 4], [rot, ref], 4)
    rho = _rep(g, [1], [[[Cyc.zeta(4)]]], 4)
    return FiniteGroupModel("d8_rho2", g, (0, 1, 2, 3), tuple(range(8)),
                            rho_t, rho)


def _d8_klein() -> FiniteGroupModel:
    g = dihedral(4)
    rot, ref = _d8_two_dim()
    rho_t = _rep(g, [1, 4], [rot, ref], 4)
    rho = _rep(g, [2, 4], [_cmat(4, [[-1]]), _cmat(4, [[1]])], 4)
    return FiniteGroupModel("d8_klein", g, (0, 2, 4, 6), tuple(range(8)),
                            rho_t, rho)


def _q8_rho2() -> FiniteGroupModel:
    g = quaternion(8)
    a, b = _q8_two_dim()
    rho_t = _rep(g, [1, 4], [a, b], 4)
    rho = _rep(g, [2], [_cmat(4, [[-1]])], 4)
    return FiniteGroupModel("q8_rho2", g, (0, 2), tuple(range(8)),
                            rho_t, rho)


def _q8_n_c4() -> FiniteGroupModel:
    g = quaternion(8)
    a, b = _q8_two_dim()
    rho_t = _rep(g, [1, 4], [a, b], 4)
    rho = _rep(g, [1], [[[Cyc.zeta(4)]]], 4)
    return FiniteGroupModel("q8_n_c4", g, (0, 1, 2, 3), tuple(range(8)),
                            rho_t, rho)


def _he3_z() -> FiniteGroupModel:
    g = heisenberg(3)
    z3 = Cyc.zeta(3)
    shift = _cmat(3, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    weight = [[Cyc.one(3), Cyc.zero(3), Cyc.zero(3)],
              [Cyc.zero(3), z3, Cyc.zero(3)],
              [Cyc.zero(3), Cyc.zero(3), z3 * z3]]
    rho_t = _rep(g, [9, 3], [shift, weight], 3)
    rho = _rep(g, [1], [[[z3]]], 3)
    return FiniteGroupModel("he3_z", g, (0, 1, 2), tuple(range(27)),
                            rho_t, rho)


def _he3_n9() -> FiniteGroupModel:
    g = heisenberg(3)
    z3 = Cyc.zeta(3)
    shift = _cmat(3, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    weight = [[Cyc.one(3), Cyc.zero(3), Cyc.zero(3)],
              [Cyc.zero(3), z3, Cyc.zero(3)],
              [Cyc.zero(3), Cyc.zero(3), z3 * z3]]
    rho_t = _rep(g, [9, 3], [shift, weight], 3)
    n = g.closure([9, 1])
    rho = _rep(g, [9, 1], [[[Cyc.one(3)]], [[z3]]], 3)
    return FiniteGroupModel("he3_n9", g, n, tuple(range(27)), rho_t, rho)


def _d16_rho() -> FiniteGroupModel:
    g = dihedral(8)
    z8 = Cyc.zeta(8)
    rot = [[z8, Cyc.zero(8)], [Cyc.zero(8), z8.galois(7)]]
    ref = _cmat(8, [[0, 1], [1, 0]])
    rho_t = _rep(g, [1, 8], [rot, ref], 8)
    rho = _rep(g, [1], [[[z8]]], 8)
    return FiniteGroupModel("d16_rho", g, tuple(range(8)), tuple(range(16)),
                            rho_t, rho)


def _q16_rho() -> FiniteGroupModel:
    g = quaternion(16)
    z8 = Cyc.zeta(8)
    rot = [[z8, Cyc.zero(8)], [Cyc.zero(8), z8.galois(7)]]
    flip = _cmat(8, [[0, -1], [1, 0]])
    rho_t = _rep(g, [1, 8], [rot, flip], 8)
    rho = _rep(g, [1], [[[z8]]], 8)
    return FiniteGroupModel("q16_rho", g, tuple(range(8)), tuple(range(16)),
                            rho_t, rho)


def _q8xc3() -> FiniteGroupModel:
    g = direct_product(quaternion(8), cyclic(3))
    i4 = Cyc.zeta(12, 3)
    z3 = Cyc.zeta(12, 4)
    a = [[i4, Cyc.zero(12)], [Cyc.zero(12), -i4]]
    b = _cmat(12, [[0, -1], [1, 0]])
    omega = [[z3, Cyc.zero(12)], [Cyc.zero(12), z3]]
    rho_t = _rep(g, [3, 12, 1], [a, b, omega], 12)
    rho = _rep(g, [6, 1], [[[-Cyc.one(12)]], [[z3]]], 12)
    n = g.closure([6, 1])
    return FiniteGroupModel("q8xc3", g, n, tuple(range(24)), rho_t, rho)


def _q8xd8() -> FiniteGroupModel:
    g = direct_product(quaternion(8), dihedral(4))
    i4 = Cyc.zeta(4)
    a = [[i4, Cyc.zero(4)], [Cyc.zero(4), -i4]]
    b = _cmat(4, [[0, -1], [1, 0]])
    scal = [[i4, Cyc.zero(4)], [Cyc.zero(4), i4]]
    j_t = g.closure([8, 32, 1])
    rho_t = _rep(g, [8, 32, 1], [a, b, scal], 4)
    rho = _rep(g, [16, 1], [[[-Cyc.one(4)]], [[i4]]], 4)
    n = g.closure([16, 1])
    return FiniteGroupModel("q8xd8", g, n, j_t, rho_t, rho)


def _c4_in_q8() -> FiniteGroupModel:
    g = quaternion(8)
    rho_t = _rep(g, [1], [[[Cyc.zeta(4)]]], 4)
    return FiniteGroupModel("c4_in_q8", g, (0, 1, 2, 3), (0, 1, 2, 3),
                            rho_t, rho_t)


def _skip_c4() -> FiniteGroupModel:
    g = dihedral(4)
    rho_t = _rep(g, [1], [_cmat(4, [[-1]])], 4)
    return FiniteGroupModel("skip_c4", g, (0, 1, 2, 3), (0, 1, 2, 3),
                            rho_t, rho_t)


def _skip_d8_center() -> FiniteGroupModel:
    g = dihedral(4)
    rho_t = _rep(g, [2, 4], [_cmat(4, [[-1]]), _cmat(4, [[1]])], 4)
    rho = _rep(g, [2], [_cmat(4, [[-1]])], 4)
    return FiniteGroupModel("skip_d8_center", g, (0, 2), (0, 2, 4, 6),
                            rho_t, rho)


def _c6_triv() -> FiniteGroupModel:
    g = cyclic(6)
    rho_t = _rep(g, [1], [_cmat(6, [[1]])], 6)
    return FiniteGroupModel("c6_triv", g, tuple(range(6)), tuple(range(6)),
                            rho_t, rho_t)


def _d8_triv() -> FiniteGroupModel:
    g = dihedral(4)
    rho_t = _rep(g, [1, 4], [_cmat(4, [[1]]), _cmat(4, [[1]])], 4)
    return FiniteGroupModel("d8_triv", g, tuple(range(8)), tuple(range(8)),
                            rho_t, rho_t)


def _he3_sub() -> FiniteGroupModel:
    g = heisenberg(3)
    n = g.closure([9, 1])
    rho_t = _rep(g, [9, 1], [[[Cyc.one(3)]], [[Cyc.zeta(3)]]], 3)
    return FiniteGroupModel("he3_sub", g, n, n, rho_t, rho_t)


def _c8_faithful() -> FiniteGroupModel:
    g = cyclic(8)
    rho_t = _rep(g, [1], [[[Cyc.zeta(8)]]], 8)
    rho = _rep(g, [4], [[[Cyc.zeta(8, 4)]]], 8)
    return FiniteGroupModel("c8_faithful", g, (0, 4), tuple(range(8)),
                            rho_t, rho)


def _d8q8_mixed() -> FiniteGroupModel:
    g = direct_product(dihedral(4), quaternion(8))
    rot, ref = _d8_two_dim()
    qa, qb = _q8_two_dim()
    ident = _cmat(4, [[1, 0], [0, 1]])
    rho_t = _rep(g, [8, 32, 1, 4],
                 [_kron(rot, ident), _kron(ref, ident),
                  _kron(ident, qa), _kron(ident, qb)], 4)
    rho = _rep(g, [8, 2], [[[Cyc.zeta(4)]], [[-Cyc.one(4)]]], 4)
    n = g.closure([8, 2])
    return FiniteGroupModel("d8q8_mixed", g, n, tuple(range(64)), rho_t, rho)


def _q8q8_tensor() -> FiniteGroupModel:
    g = direct_product(quaternion(8), quaternion(8))
    qa, qb = _q8_two_dim()
    ident = _cmat(4, [[1, 0], [0, 1]])
    rho_t = _rep(g, [8, 32, 1, 4],
                 [_kron(qa, ident), _kron(qb, ident),
                  _kron(ident, qa), _kron(ident, qb)], 4)
    rho = _rep(g, [8, 32, 2],
               [qa, qb, _cmat(4, [[-1, 0], [0, -1]])], 4)
    n = g.closure([8, 32, 2])
    return FiniteGroupModel("q8q8_tensor", g, n, tuple(range(64)),
                            rho_t, rho)


_BUILDERS = [
    _d8_rho2, _d8_klein, _q8_rho2, _q8_n_c4, _he3_z, _he3_n9,
    _d16_rho, _q16_rho, _q8xc3, _q8xd8, _c4_in_q8, _skip_c4,
    _skip_d8_center, _c6_triv, _d8_triv, _he3_sub, _c8_faithful,
    _d8q8_mixed, _q8q8_tensor,
]


def build_catalog() -> list[FiniteGroupModel]:
    return [b() for b in _BUILDERS]


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------

def _coeffs_to_json(value: Cyc) -> list[str]:
    return [str(c) for c in value.c]


def _coeffs_from_json(cond: int, coeffs: list[str]) -> Cyc:
    # the constructor validates the coefficient-vector length
    return Cyc(cond, [Q(c) for c in coeffs])


def _rep_to_json(rep: Representation, gens: list[int]) -> dict:
    return {
        "generators": list(gens),
        "matrices": [[[_coeffs_to_json(e) for e in row]
                      for row in rep.matrix(g)] for g in gens],
    }


def _rep_from_json(group: FiniteGroup, data: dict, cond: int
                   ) -> Representation:
    mats = [[[_coeffs_from_json(cond, e) for e in row] for row in m]
            for m in data["matrices"]]
    return Representation.from_generators(group, list(data["generators"]),
                                          mats, cond)


def _generators_of(model: FiniteGroupModel, rep: Representation
                   ) -> list[int]:
    g = model.group
    gens: list[int] = []
    span: tuple[int, ...] = (0,)
    for x in rep.domain:
        if x not in span:
            gens.append(x)
            span = g.closure(gens)
    return gens


def model_to_json(model: FiniteGroupModel) -> dict:
    gens_t = _generators_of(model, model.rho_tilde)
    gens_r = _generators_of(model, model.rho)
    return {
        "name": model.name,
        "group": {"table": [list(r) for r in model.group.table],
                  "label": model.group.label},
        "normal": list(model.normal),
        "j_tilde": list(model.j_tilde),
        "conductor": model.rho_tilde.conductor,
        "rho_tilde": _rep_to_json(model.rho_tilde, gens_t),
        "rho": _rep_to_json(model.rho, gens_r),
    }


def model_from_json(data: dict) -> FiniteGroupModel:
    gsrc = data["group"]
    if "table" in gsrc:
        group = FiniteGroup(tuple(tuple(r) for r in gsrc["table"]),
                            gsrc.get("label", ""))
    elif "permutations" in gsrc:
        group = from_permutations([tuple(p) for p in gsrc["permutations"]],
                                  gsrc.get("label", ""))
    else:
        raise ValueError("group needs a table or permutation generators")
    cond = int(data["conductor"])
    model = FiniteGroupModel(
        data["name"], group, tuple(data["normal"]), tuple(data["j_tilde"]),
        _rep_from_json(group, data["rho_tilde"], cond),
        _rep_from_json(group, data["rho"], cond))
    model.validate()
    return model


def catalog_to_json(models: list[FiniteGroupModel]) -> dict:
    return {"entries": [model_to_json(m) for m in models]}


def catalog_from_json(data: dict) -> list[FiniteGroupModel]:
    return [model_from_json(e) for e in data["entries"]]


def write_catalog(path: str, models: list[FiniteGroupModel] | None = None
                  ) -> None:
    with open(path, "w") as fh:
        json.dump(catalog_to_json(models or build_catalog()), fh)


def read_catalog(path: str) -> list[FiniteGroupModel]:
    with open(path) as fh:
        return catalog_from_json(json.load(fh))


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EntryResult:
    name: str
    clifford: CliffordReport
    transfer: TransferReport
    center: CenterReport
    commutativity: CommutativityReport

    @property
    def skipped(self) -> bool:
        return self.transfer.status == "SKIPPED"

    @property
    def passed(self) -> bool:
        if self.skipped:
            return True
        return bool(self.transfer.equal and self.center.equal
                    and self.commutativity.coincide)

    def to_dict(self) -> dict:
        c = self.clifford
        return {
            "name": self.name,
            "multiplicity": c.multiplicity,
            "orbit_size": c.orbit_size,
            "inertia_order": len(c.inertia),
            "stabilizer_order":
                None if c.stabilizer is None else len(c.stabilizer),
            "dagger_order": len(c.dagger),
            "twist_order": c.twist_order,
            "transfer": {
                "status": self.transfer.status,
                "failures": list(self.transfer.failures),
                "over_normal": self.transfer.multiplicity_over_normal,
                "over_j": self.transfer.multiplicity_over_j,
                "equal": self.transfer.equal,
            },
            "center": {
                "status": self.center.status,
                "constituents": self.center.constituent_count,
                "dagger_index": self.center.dagger_index,
                "equal": self.center.equal,
            },
            "commutativity": {
                "status": self.commutativity.status,
                "normal_restriction_free":
                    self.commutativity.normal_restriction_free,
                "j_restriction_free": self.commutativity.j_restriction_free,
                "endomorphisms_commute":
                    self.commutativity.endomorphisms_commute,
                "coincide": self.commutativity.coincide,
            },
            "passed": self.passed,
        }


def evaluate_entry(model: FiniteGroupModel) -> EntryResult:
    model.validate()
    cr = clifford_report(model)
    if cr.stabilizer is not None:
        n_int, n_st, n_dag = len(cr.inertia), len(cr.stabilizer), len(cr.dagger)
        if n_int != cr.multiplicity * n_st or n_st != cr.multiplicity * n_dag:
            raise AssertionError(
                f"{model.name}: stabilizer indices break the multiplicity "
                f"ladder ({n_int}, {n_st}, {n_dag}, m={cr.multiplicity})")
    return EntryResult(model.name, cr,
                       multiplicity_transfer_check(model),
                       center_dimension_check(model),
                       commutativity_check(model))


def evaluate_catalog(models: list[FiniteGroupModel], jobs: int = 1
                     ) -> list[EntryResult]:
    """Evaluate entries independently; result order follows the input
    order regardless of completion order."""
    if jobs <= 1:
        return [evaluate_entry(m) for m in models]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(evaluate_entry, models))
