"""Length-graded algebra of a split datum in its lattice presentation.

Basis labels pair a coweight with a finite Weyl element.  The finite
part carries the braid and quadratic relations; lattice labels multiply
additively; moving a finite generator past a lattice label re-expands
through an exact geometric sum (the divided difference of a label by
its reflection is always lattice-polynomial, asserted by construction).
Scalars are Laurent polynomials in a formal v with v^2 = q, the
normalization under which a dominant translation label abbreviates the
length-rescaled translation and a general label is independent of how
it splits as a difference of dominant ones.
"""
from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction as Q

from .laurent import LaurentScalar, RatFunc, rat_rank
from .root_datum import RootDatum, WeylElement, WeylGroup

Coweight = tuple[int, ...]
Label = tuple[Coweight, WeylElement]

_Q_MINUS_ONE = LaurentScalar({2: Q(1), 0: Q(-1)})


class HeckeElement:
    """Finite scalar combination of (coweight, finite Weyl) labels.
    Zero coefficients are pruned; equality is label-wise."""
    __slots__ = ("c",)

    def __init__(self, coeffs: dict[Label, LaurentScalar] | None = None):
        self.c = {k: v for k, v in (coeffs or {}).items() if not v.is_zero}

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.c)
        for k, v in other.c.items():
            out[k] = out.get(k, LaurentScalar.zero()) + v
        return HeckeElement(out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement({k: -v for k, v in self.c.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, s: LaurentScalar) -> "HeckeElement":
        return HeckeElement({k: v * s for k, v in self.c.items()})

    def coefficient(self, lam, w: WeylElement) -> LaurentScalar:
        return self.c.get((tuple(lam), w), LaurentScalar.zero())

    @property
    def support(self) -> list[Label]:
        return sorted(self.c, key=lambda k: (k[0], k[1].word))

    @property
    def is_zero(self) -> bool:
        return not self.c

    def __eq__(self, other) -> bool:
        return isinstance(other, HeckeElement) and self.c == other.c

    def __repr__(self) -> str:
        if not self.c:
            return "0"
        bits = []
        for lam, w in self.support:
            word = "*".join(f"s{i}" for i in w.word) or "e"
            bits.append(f"({self.c[(lam, w)]!r})*th{lam}*T[{word}]")
        return " + ".join(bits)


class BernsteinAlgebra:
    """Multiplication engine over a fixed datum: finite-word products,
    lattice labels, the commutation rewriting, and centrality checks."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.group = WeylGroup(datum)
        self.rank = datum.ambient_rank
        self._zero = (0,) * self.rank
        self._commute_cache: dict = {}

    # -- constructors ----------------------------------------------------

    def one(self) -> HeckeElement:
        return HeckeElement({(self._zero, self.group.identity):
                             LaurentScalar.one()})

    def t_element(self, i: int) -> HeckeElement:
        return HeckeElement({(self._zero, self.group.simple_reflection(i)):
                             LaurentScalar.one()})

    def t_word(self, word) -> HeckeElement:
        out = self.one()
        for i in word:
            out = self.finite_hecke_multiply(out, self.t_element(i))
        return out

    def theta(self, lam) -> HeckeElement:
        """Lattice label: for dominant input it stands for the
        length-rescaled translation, in general for the difference of
        two dominant ones; additivity makes the splitting immaterial."""
        return HeckeElement({(tuple(int(x) for x in lam),
                              self.group.identity): LaurentScalar.one()})

    # -- rewriting rules ---------------------------------------------------

    def _pair_simple(self, i: int, lam: Coweight) -> int:
        alpha = self.datum.roots[self.datum.simple[i]]
        return sum(a * x for a, x in zip(alpha, lam))

    def _coroot(self, i: int) -> Coweight:
        return self.datum.coroots[self.datum.simple[i]]

    def _t_times_s(self, u: WeylElement, i: int
                   ) -> dict[WeylElement, LaurentScalar]:
        s = self.group.simple_reflection(i)
        us = self.group.mul(u, s)
        if us.length == u.length + 1:
            return {us: LaurentScalar.one()}
        return {u: _Q_MINUS_ONE, us: LaurentScalar.q_power(1)}

    def _commute_one(self, i: int, lam: Coweight):
        # moving one finite generator left past a lattice label: the
        # reflected label keeps the generator, and the remainder is the
        # exact geometric sum interpolating the label and its reflection
        n = self._pair_simple(i, lam)
        av = self._coroot(i)
        slam = tuple(x - n * a for x, a in zip(lam, av))
        terms: list[tuple[Coweight, bool, LaurentScalar]] = [
            (slam, True, LaurentScalar.one())]
        if n > 0:
            for t in range(n):
                terms.append((tuple(x - t * a for x, a in zip(lam, av)),
                              False, _Q_MINUS_ONE))
        elif n < 0:
            for t in range(1, -n + 1):
                terms.append((tuple(x + t * a for x, a in zip(lam, av)),
                              False, -_Q_MINUS_ONE))
        return terms

    def _commute_word(self, word: tuple[int, ...], lam: Coweight
                      ) -> dict[Label, LaurentScalar]:
        key = (word, lam)
        cached = self._commute_cache.get(key)
        if cached is not None:
            return cached
        if not word:
            out = {(lam, self.group.identity): LaurentScalar.one()}
        else:
            prefix, last = word[:-1], word[-1]
            acc: dict[Label, LaurentScalar] = {}
            for nu, keeps_gen, coeff in self._commute_one(last, lam):
                for (mu, u), c in self._commute_word(prefix, nu).items():
                    c = c * coeff
                    if keeps_gen:
                        for x, d in self._t_times_s(u, last).items():
                            k = (mu, x)
                            acc[k] = acc.get(k, LaurentScalar.zero()) + c * d
                    else:
                        k = (mu, u)
                        acc[k] = acc.get(k, LaurentScalar.zero()) + c
            out = {k: v for k, v in acc.items() if not v.is_zero}
        self._commute_cache[key] = out
        return out

    def _t_word_mul(self, u: WeylElement, w: WeylElement
                    ) -> dict[WeylElement, LaurentScalar]:
        acc = {u: LaurentScalar.one()}
        for i in w.word:
            nxt: dict[WeylElement, LaurentScalar] = {}
            for x, c in acc.items():
                for y, d in self._t_times_s(x, i).items():
                    nxt[y] = nxt.get(y, LaurentScalar.zero()) + c * d
            acc = {k: v for k, v in nxt.items() if not v.is_zero}
        return acc

    # -- products ----------------------------------------------------------

    def finite_hecke_multiply(self, x: HeckeElement, y: HeckeElement
                              ) -> HeckeElement:
        """Word-by-word product route for elements with no lattice part;
        independent of the commutation rewriting."""
        for lam, _w in itertools.chain(x.c, y.c):
            if lam != self._zero:
                raise ValueError(
                    "finite multiplication needs elements supported on the "
                    "finite part")
        out: dict[Label, LaurentScalar] = {}
        for (_z1, w1), c1 in x.c.items():
            for (_z2, w2), c2 in y.c.items():
                for w, d in self._t_word_mul(w1, w2).items():
                    k = (self._zero, w)
                    out[k] = out.get(k, LaurentScalar.zero()) + c1 * c2 * d
        return HeckeElement(out)

    def bernstein_multiply(self, x: HeckeElement, y: HeckeElement
                           ) -> HeckeElement:
        out: dict[Label, LaurentScalar] = {}
        for (lam1, w1), c1 in x.c.items():
            for (lam2, w2), c2 in y.c.items():
                c12 = c1 * c2
                for (mu, u), c in self._commute_word(w1.word, lam2).items():
                    shifted = tuple(a + b for a, b in zip(lam1, mu))
                    for w, d in self._t_word_mul(u, w2).items():
                        k = (shifted, w)
                        out[k] = out.get(k, LaurentScalar.zero()) + c12 * c * d
        return HeckeElement(out)

    # -- central elements ----------------------------------------------------

    def central_element(self, mu) -> HeckeElement:
        mu = tuple(int(x) for x in mu)
        if not self.datum.is_dominant_coweight(mu):
            warnings.warn("coweight is not dominant; "
                          "using its dominant representative")
            mu = self.group.dominant_in_orbit(mu)
        return HeckeElement({(lam, self.group.identity): LaurentScalar.one()
                             for lam in self.group.orbit_cocharacter(mu)})

    def is_central(self, z: HeckeElement) -> bool:
        # the finite generators and the lattice basis directions generate
        # the algebra, and commuting passes to inverses, so this suffices
        gens = [self.t_element(i) for i in range(len(self.datum.simple))]
        for j in range(self.rank):
            gens.append(self.theta(tuple(int(k == j) for k in range(self.rank))))
        return all(self.bernstein_multiply(z, g) == self.bernstein_multiply(g, z)
                   for g in gens)


def dominant_decomposition(datum: RootDatum, lam) -> tuple[Coweight, Coweight]:
    """Split a coweight as a difference of two dominant ones.  The
    subtrahend is a multiple of an integral strictly dominant direction,
    large enough to dominate every negative simple pairing."""
    lam = tuple(int(x) for x in lam)
    if datum.is_dominant_coweight(lam):
        return lam, (0,) * len(lam)
    fund = datum.fundamental_coweights()
    total = [sum(fw[k] for fw in fund) for k in range(datum.ambient_rank)]
    den = math.lcm(*(x.denominator for x in total))
    direction = tuple(int(x * den) for x in total)
    worst = max(-min(0, int(datum.pairing(datum.roots[k], lam)))
                for k in datum.simple)
    steps = -(-worst // den)  # ceiling division
    lam2 = tuple(steps * x for x in direction)
    lam1 = tuple(a + b for a, b in zip(lam, lam2))
    assert datum.is_dominant_coweight(lam1) and datum.is_dominant_coweight(lam2)
    return lam1, lam2


# ---------------------------------------------------------------------------
# truncated center: orbit sums span the commutant of the generators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SatakeReport:
    """Truncated-center verification: every orbit sum is central, their
    supports partition the orbit-closed label set, and the commutant of
    the generators inside the lattice span has exactly their dimension."""
    ok: bool
    failures: tuple[str, ...]
    center_dimension: int
    representatives: tuple[Coweight, ...]
    orbits: tuple[tuple[Coweight, ...], ...]


def satake_check(datum: RootDatum, radius: int) -> SatakeReport:
    if radius < 0:
        raise ValueError("radius must be >= 0")
    alg = BernsteinAlgebra(datum)
    group = alg.group

    orbit_map: dict[Coweight, tuple[Coweight, ...]] = {}
    labels: set[Coweight] = set()
    for lam in itertools.product(range(-radius, radius + 1), repeat=alg.rank):
        if lam in labels:
            continue
        orb = tuple(sorted(group.orbit_cocharacter(lam)))
        orbit_map[group.dominant_in_orbit(lam)] = orb
        labels |= set(orb)
    reps = sorted(orbit_map)
    failures: list[str] = []

    for rep in reps:
        z = alg.central_element(rep)
        if tuple(sorted(lam for lam, _w in z.c)) != orbit_map[rep]:
            failures.append(f"support of the orbit sum of {rep} is wrong")
        if not alg.is_central(z):
            failures.append(f"orbit sum of {rep} is not central")

    if sum(len(o) for o in orbit_map.values()) != len(labels):
        failures.append("orbit supports overlap")

    basis = sorted(labels)
    col = {lam: i for i, lam in enumerate(basis)}
    rows_map: dict[tuple[int, Label], list[LaurentScalar]] = {}
    for i in range(len(datum.simple)):
        g = alg.t_element(i)
        for lam in basis:
            th = alg.theta(lam)
            comm = alg.bernstein_multiply(th, g) - alg.bernstein_multiply(g, th)
            for lab, scal in comm.c.items():
                row = rows_map.setdefault(
                    (i, lab), [LaurentScalar.zero()] * len(basis))
                row[col[lam]] = scal
    # lattice generators commute with every lattice label exactly
    for j in range(alg.rank):
        gen = alg.theta(tuple(int(k == j) for k in range(alg.rank)))
        for lam in basis:
            th = alg.theta(lam)
            if alg.bernstein_multiply(th, gen) != alg.bernstein_multiply(gen, th):
                failures.append("lattice generators fail to commute")
                break

    rows = [[RatFunc.from_laurent(x) for x in row]
            for row in rows_map.values()]
    kdim = len(basis) - rat_rank(rows)
    if kdim != len(reps):
        failures.append(f"truncated center has dimension {kdim}, "
                        f"expected {len(reps)}")
    return SatakeReport(not failures, tuple(failures), kdim, tuple(reps),
                        tuple(orbit_map[r] for r in reps))
