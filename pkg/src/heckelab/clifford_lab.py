"""Clifford theory for explicit finite-group models, by brute force.

The setting throughout: a finite group G with a normal subgroup N of
abelian quotient, an inducing subgroup Jt with J = Jt ∩ N, an
irreducible representation rho_tilde of Jt and an irreducible summand
rho of its restriction to J.  The module computes restriction
multiplicities, twist groups and their common kernel, inertia and
maximal-stabilizer subgroups, intertwining sets, and runs the three
model-level checks (multiplicity transfer, center dimension,
commutativity), each by at least two independent routes where the
statement being tested is an equality.

All arithmetic is exact over a fixed cyclotomic field.  Nothing here
assumes the statements under test; checks that depend on unverified
hypotheses are reported as SKIPPED with the failing hypothesis named.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Sequence

from .cyclotomic import (
    Cyc,
    cyc_column_space,
    cyc_identity,
    cyc_inv_matrix,
    cyc_matmul,
    cyc_nullspace,
    cyc_solve,
    cyc_solve_matrix,
)
from .finite_groups import FiniteGroup, quotient_characters
from .representations import (
    Char,
    Representation,
    char_key,
    common_multiplicity,
    conjugate_character,
    constituent_count,
    induced_representation,
    inner_product,
    is_irreducible,
    restrict_character,
)


# ---------------------------------------------------------------------------
# model container
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteGroupModel:
    """G with normal N (abelian quotient), inducing subgroup Jt with an
    irreducible rho_tilde, and an irreducible summand rho of the
    restriction to J = Jt ∩ N."""
    name: str
    group: FiniteGroup
    normal: tuple[int, ...]
    j_tilde: tuple[int, ...]
    rho_tilde: Representation
    rho: Representation

    @property
    def j(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.j_tilde) & set(self.normal)))

    def validate(self) -> None:
        g = self.group
        if not g.is_subgroup(self.normal) or not g.is_normal(self.normal):
            raise ValueError("N must be a normal subgroup")
        if not g.is_subgroup(self.j_tilde):
            raise ValueError("inducing set must be a subgroup")
        if not set(g.commutator_subgroup()) <= set(self.normal):
            raise ValueError("G/N must be abelian")
        if self.rho_tilde.domain != tuple(sorted(self.j_tilde)):
            raise ValueError("rho_tilde must live on the inducing subgroup")
        if self.rho.domain != self.j:
            raise ValueError("rho must live on J")
        if not is_irreducible(self.rho_tilde):
            raise ValueError("rho_tilde must be irreducible")
        if not is_irreducible(self.rho):
            raise ValueError("rho must be irreducible")
        mult = inner_product(restrict_character(self.rho_tilde.character(),
                                                self.j),
                             self.rho.character(), self.j)
        if mult < 1:
            raise ValueError("rho is not a constituent of the restriction")


# ---------------------------------------------------------------------------
# restriction to a normal subgroup
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RestrictionReport:
    multiplicity: int
    orbit_size: int
    orbit: tuple | None  # conjugate characters when a constituent is known


def restrict_decompose(group: FiniteGroup, sub: Sequence[int],
                       rep: Representation,
                       constituent: Char | None = None) -> RestrictionReport:
    """Common multiplicity and conjugate orbit of the restriction of an
    irreducible representation to a normal subgroup of its domain.

    The multiplicity is computed twice: from the norm of the restricted
    character and from the class-sum rank.  When a known constituent
    character is passed, the full orbit is assembled and the literal
    identity  Res = m * (sum of the orbit)  is checked pointwise."""
    sub = tuple(sorted(sub))
    if not group.is_normal(sub, rep.domain):
        raise ValueError("restriction target must be normal in the domain")
    chi = rep.character()
    norm = inner_product(chi, chi, rep.domain)
    if norm != 1:
        raise ValueError(
            f"representation is reducible: <chi,chi> = {norm}")
    m, k = common_multiplicity(rep, sub)
    orbit = None
    if constituent is not None:
        seen: dict[tuple, Char] = {}
        for g in rep.domain:
            cc = {x: constituent[group.conj(g, x)] for x in sub}
            seen.setdefault(char_key(cc), cc)
        orbit = tuple(seen.values())
        if len(orbit) != k:
            raise AssertionError("orbit size disagrees with class-sum count")
        for x in sub:
            total = Cyc.zero(rep.conductor)
            for cc in orbit:
                total = total + cc[x]
            if total.scale(m) != chi[x]:
                raise AssertionError("orbit sum does not rebuild the restriction")
        d = constituent[0].to_fraction()
        if rep.dim != k * m * d:
            raise AssertionError("dimension identity fails")
    return RestrictionReport(m, k, orbit)


def inertia_subgroup(group: FiniteGroup, big: Sequence[int],
                     sub: Sequence[int], chi: Char) -> tuple[int, ...]:
    """Elements of big whose conjugation fixes the character on sub."""
    out = [g for g in big
           if all(chi[group.conj(g, x)] == chi[x] for x in sub)]
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# twists
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TwistReport:
    order: int
    exponent: int                    # values are zeta_exponent^k
    twists: tuple                    # dicts g -> exponent k
    dagger: tuple[int, ...]          # common kernel of the twists


def twist_group(group: FiniteGroup, big: Sequence[int], sub: Sequence[int],
                rep: Representation) -> TwistReport:
    """Characters of big/sub fixing the representation (by character
    equality), and their common kernel."""
    e, qchars = quotient_characters(group, tuple(sorted(big)),
                                    tuple(sorted(sub)))
    cond = rep.conductor
    if e > 1 and cond % e != 0:
        raise ValueError("conductor does not contain the quotient exponent")
    chi = rep.character()
    fixing = []
    for nu in qchars:
        if all(chi[g] * Cyc.zeta(cond, nu[g] * (cond // e) if e > 1 else 0)
                == chi[g] for g in big):
            fixing.append(nu)
    dagger = tuple(sorted(g for g in big
                          if all(nu[g] % e == 0 for nu in fixing)))
    if len(fixing) * len(dagger) != len(tuple(big)):
        raise AssertionError("twist count must equal the kernel index")
    return TwistReport(len(fixing), e, tuple(fixing), dagger)


# ---------------------------------------------------------------------------
# maximal stabilizer
# ---------------------------------------------------------------------------

def _subgroups_between(group: FiniteGroup, lower: Sequence[int],
                       upper: Sequence[int]) -> list[tuple[int, ...]]:
    upper_set = set(upper)
    base = group.closure(lower)
    found = {base}
    frontier = [base]
    while frontier:
        nxt = []
        for s in frontier:
            for x in upper_set - set(s):
                t = group.closure(set(s) | {x})
                if t not in found:
                    found.add(t)
                    nxt.append(t)
        frontier = nxt
    return sorted(found, key=lambda s: (-len(s), s))


def _greedy_generators(group: FiniteGroup, subset: Sequence[int]) -> list[int]:
    gens: list[int] = []
    span = (0,)
    for x in sorted(subset):
        if x not in span:
            gens.append(x)
            span = group.closure(gens)
    return gens


def _projective_matrix(m_g, mult: int, d: int):
    """The m x m matrix acting on the multiplicity space, recovered from
    the action on the decomposed space via a projective frame lift."""
    cond = m_g[0][0].m

    def act(c: list[Cyc]) -> list[Cyc]:
        # image of the subspace c (x) C^d, as a multiplicity-space line
        cols = []
        for k in range(d):
            vec = [Cyc.zero(cond)] * (mult * d)
            for r in range(mult):
                if c[r]:
                    vec[r * d + k] = c[r]
            w = [sum((m_g[i][j] * vec[j] for j in range(mult * d)
                      if vec[j]), Cyc.zero(cond)) for i in range(mult * d)]
            for l in range(d):
                cols.append([w[i * d + l] for i in range(mult)])
        space = cyc_column_space([list(r) for r in zip(*cols)])
        if len(space) != 1:
            raise AssertionError("image is not a single multiplicity line")
        return space[0]

    basis = cyc_identity(mult, cond)
    images = [act(basis[i]) for i in range(mult)]
    w0 = act([Cyc.one(cond)] * mult)
    coeffs = cyc_solve([list(r) for r in zip(*images)], w0)
    if coeffs is None or not all(coeffs):
        raise AssertionError("degenerate projective frame")
    cols = [[images[i][r] * coeffs[i] for r in range(mult)]
            for i in range(mult)]
    return [[cols[j][i] for j in range(mult)] for i in range(mult)]


def _pairwise_commuting(mats) -> bool:
    """Whether the lifted multiplicity-space matrices commute exactly.

    The projective images commute (the quotient acting on the
    multiplicity space is abelian), so each commutator of lifts is a
    scalar matrix, and that scalar does not depend on the scalar
    normalization of the lifts.  The lifts have finite order up to
    scalar, hence are diagonalizable, so a common eigenline exists
    exactly when every commutator scalar is 1, i.e. when the lifts
    commute on the nose."""
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if cyc_matmul(mats[i], mats[j]) != cyc_matmul(mats[j], mats[i]):
                return False
    return True


def maximal_stabilizer(group: FiniteGroup, sub: Sequence[int],
                       rep: Representation, constituent: Representation,
                       dagger: Sequence[int],
                       inertia: Sequence[int]) -> tuple[int, ...] | None:
    """Largest subgroup between the twist kernel and the inertia group
    that stabilizes an irreducible sub-module of the restriction
    isomorphic to the given constituent.  Ties break toward the
    lexicographically smallest element tuple.  Returns None if no
    candidate subgroup stabilizes a line over the working field."""
    sub = tuple(sorted(sub))
    m, k = common_multiplicity(rep, sub)
    if m == 1:
        return tuple(sorted(inertia))
    cond = rep.conductor
    d = constituent.dim

    # the constituent-isotypic subspace, as an inertia-representation
    if k == 1:
        iso_mats = {g: rep.matrix(g) for g in inertia}
        dim_iso = rep.dim
    else:
        chi = constituent.character()
        proj = None
        for h in sub:
            coeff = chi[group.inv(h)].scale(Q(d, len(sub)))
            mat = rep.matrix(h)
            term = [[mat[i][j] * coeff for j in range(rep.dim)]
                    for i in range(rep.dim)]
            proj = term if proj is None else [
                [proj[i][j] + term[i][j] for j in range(rep.dim)]
                for i in range(rep.dim)]
        basis_cols = cyc_column_space(proj)
        dim_iso = len(basis_cols)
        cmat = [list(r) for r in zip(*basis_cols)]
        iso_mats = {}
        for g in inertia:
            image = cyc_matmul(rep.matrix(g), cmat)
            iso_mats[g] = cyc_solve_matrix(cmat, image)
    if dim_iso != m * d:
        raise AssertionError("isotypic dimension mismatch")

    # basis of the intertwiner space Hom(constituent, isotypic)
    gens_h = _greedy_generators(group, sub)
    rows = []
    for h in gens_h:
        a = iso_mats[h] if k > 1 else rep.matrix(h)
        b = constituent.matrix(h)
        for i in range(dim_iso):
            for l in range(d):
                row = [Cyc.zero(cond)] * (dim_iso * d)
                for r in range(dim_iso):
                    if a[i][r]:
                        row[r * d + l] = row[r * d + l] + a[i][r]
                for t in range(d):
                    if b[t][l]:
                        row[i * d + t] = row[i * d + t] - b[t][l]
                rows.append(row)
    hom_basis = cyc_nullspace(rows)
    if len(hom_basis) != m:
        raise AssertionError("intertwiner space has wrong dimension")

    # change of basis identifying the isotypic space with C^m (x) C^d
    phi = [[hom_basis[i][r * d + l] for i in range(m) for l in range(d)]
           for r in range(dim_iso)]
    phi_inv = cyc_inv_matrix(phi)

    for cand in _subgroups_between(group, dagger, inertia):
        gens = [g for g in _greedy_generators(group, cand) if g not in sub]
        bmats = [_projective_matrix(
            cyc_matmul(cyc_matmul(phi_inv, iso_mats[g]), phi), m, d)
            for g in gens]
        if _pairwise_commuting(bmats):
            return cand
    return None


# ---------------------------------------------------------------------------
# assembled per-pair report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CliffordReport:
    multiplicity: int
    orbit_size: int
    inertia: tuple[int, ...]
    stabilizer: tuple[int, ...] | None
    dagger: tuple[int, ...]
    twist_order: int


def clifford_report(model: FiniteGroupModel) -> CliffordReport:
    g = model.group
    jt = tuple(sorted(model.j_tilde))
    j = model.j
    rest = restrict_decompose(g, j, model.rho_tilde,
                              constituent=model.rho.character())
    tw = twist_group(g, jt, j, model.rho_tilde)
    inert = inertia_subgroup(g, jt, j, model.rho.character())
    stab = maximal_stabilizer(g, j, model.rho_tilde, model.rho,
                              tw.dagger, inert)
    return CliffordReport(rest.multiplicity, rest.orbit_size, inert, stab,
                          tw.dagger, tw.order)


# ---------------------------------------------------------------------------
# intertwining
# ---------------------------------------------------------------------------

def intertwining_reps(group: FiniteGroup, j: Sequence[int],
                      chi: Char) -> list[int]:
    """Double-coset representatives g with nonzero intertwining between
    the representation and its g-conjugate on J ∩ J^g."""
    j_set = set(j)
    out = []
    for g in group.double_coset_reps(tuple(sorted(j))):
        conj_dom = {group.conj(group.inv(g), x) for x in j_set}
        meet = sorted(j_set & conj_dom)
        cond = next(iter(chi.values())).m
        acc = Cyc.zero(cond)
        for x in meet:
            acc = acc + chi[x] * chi[group.conj(g, x)].conjugate()
        if acc:
            out.append(g)
    return out


def mackey_endomorphism_dimension(group: FiniteGroup, j: Sequence[int],
                                  chi: Char) -> int:
    """dim End of the induced representation, summed double coset by
    double coset: each coset contributes the intertwining dimension of
    the representation against its conjugate on the overlap subgroup."""
    j_set = set(j)
    total = Q(0)
    for g in group.double_coset_reps(tuple(sorted(j))):
        conj_dom = {group.conj(group.inv(g), x) for x in j_set}
        meet = sorted(j_set & conj_dom)
        chi_g = {x: chi[group.conj(g, x)] for x in meet}
        total += inner_product(restrict_character(chi, meet), chi_g, meet)
    assert total.denominator == 1
    return int(total)


# ---------------------------------------------------------------------------
# model-level checks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HypothesisReport:
    ok: bool
    failures: tuple[str, ...]


def check_hypotheses(model: FiniteGroupModel
                     ) -> tuple[HypothesisReport, Representation]:
    g = model.group
    pi = induced_representation(g, tuple(sorted(model.j_tilde)),
                                model.rho_tilde)
    failures = []
    chi_pi = pi.character()
    if inner_product(chi_pi, chi_pi, pi.domain) != 1:
        failures.append("induced representation is reducible")
    jt_set = set(model.j_tilde)
    seen = set()
    for g0 in sorted(model.j_tilde):
        cc = {x: model.rho.character()[g.conj(g0, x)] for x in model.j}
        key = char_key(cc)
        if key in seen:
            continue
        seen.add(key)
        for rep_g in intertwining_reps(g, model.j, cc):
            if rep_g not in jt_set:
                failures.append(
                    "intertwining of a restriction constituent escapes "
                    "the inducing subgroup")
                break
        else:
            continue
        break
    return HypothesisReport(not failures, tuple(failures)), pi


@dataclass(frozen=True)
class TransferReport:
    status: str   # OK or SKIPPED
    failures: tuple[str, ...]
    multiplicity_over_normal: int | None
    multiplicity_over_j: int | None

    @property
    def equal(self) -> bool | None:
        if self.status != "OK":
            return None
        return self.multiplicity_over_normal == self.multiplicity_over_j


def multiplicity_transfer_check(model: FiniteGroupModel) -> TransferReport:
    hyp, pi = check_hypotheses(model)
    if not hyp.ok:
        return TransferReport("SKIPPED", hyp.failures, None, None)
    m_up, _ = common_multiplicity(pi, model.normal)
    rest = restrict_decompose(model.group, model.j, model.rho_tilde,
                              constituent=model.rho.character())
    return TransferReport("OK", (), m_up, rest.multiplicity)


@dataclass(frozen=True)
class CenterReport:
    status: str
    failures: tuple[str, ...]
    constituent_count: int | None
    dagger_index: int | None

    @property
    def equal(self) -> bool | None:
        if self.status != "OK":
            return None
        return self.constituent_count == self.dagger_index


def center_dimension_check(model: FiniteGroupModel) -> CenterReport:
    hyp, _ = check_hypotheses(model)
    if not hyp.ok:
        return CenterReport("SKIPPED", hyp.failures, None, None)
    g = model.group
    ind = induced_representation(g, model.j, model.rho)
    k = constituent_count(ind, range(g.order))
    tw = twist_group(g, tuple(sorted(model.j_tilde)), model.j,
                     model.rho_tilde)
    dagger_index = len(tw.dagger) // len(model.j)
    return CenterReport("OK", (), k, dagger_index)


@dataclass(frozen=True)
class CommutativityReport:
    status: str
    failures: tuple[str, ...]
    normal_restriction_free: bool | None
    j_restriction_free: bool | None
    endomorphisms_commute: bool | None

    @property
    def coincide(self) -> bool | None:
        if self.status != "OK":
            return None
        return (self.normal_restriction_free == self.j_restriction_free
                == self.endomorphisms_commute)


def commutativity_check(model: FiniteGroupModel) -> CommutativityReport:
    hyp, pi = check_hypotheses(model)
    if not hyp.ok:
        return CommutativityReport("SKIPPED", hyp.failures, None, None, None)
    g = model.group
    m_up, _ = common_multiplicity(pi, model.normal)
    rest = restrict_decompose(g, model.j, model.rho_tilde,
                              constituent=model.rho.character())
    ind = induced_representation(g, model.j, model.rho)
    k = constituent_count(ind, range(g.order))
    chi_ind = ind.character()
    dim_end = inner_product(chi_ind, chi_ind, ind.domain)
    assert dim_end.denominator == 1
    mackey = mackey_endomorphism_dimension(g, model.j, model.rho.character())
    if mackey != int(dim_end):
        raise AssertionError("coset-by-coset and global endomorphism "
                             "dimensions disagree")
    return CommutativityReport("OK", (), m_up == 1, rest.multiplicity == 1,
                               mackey == k)
