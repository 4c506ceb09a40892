"""Reduced root data with exact integer coordinates.

A root datum here is a finite list of root/coroot pairs inside a pair of
dual integer lattices (characters and cocharacters, paired by the
standard dot product), plus a choice of simple roots.  Two realizations
are built in:

* named Cartan types realized on the root lattice: characters get the
  simple roots as standard basis vectors, so the coordinates of any root
  are literally its simple-root coefficients, and cocharacters form the
  full dual lattice (fundamental coweights are the dual standard basis);
  an optional block of central coordinates, on which every root
  vanishes, can be appended;
* a general-linear realization on Z^n with roots e_i - e_j and coroots
  the same vectors in the dual lattice, which is the coordinate system
  the worked matrix examples use.

The Weyl group is enumerated once by breadth-first search.  Elements are
canonicalized by their integer action matrix on cocharacters and carry a
shortlex-minimal reduced word in the simple reflections.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Iterable, Sequence

from . import _linalg

IVec = tuple[int, ...]

MAX_WEYL_ORDER = 10080


# ---------------------------------------------------------------------------
# Cartan matrices for the named types.  Convention: entry [i][j] is the
# pairing of simple root j against simple coroot i, so row i lists the
# coordinates of coroot i in the basis dual to the simple roots.
# ---------------------------------------------------------------------------

def cartan_matrix(kind: str, n: int) -> list[list[int]]:
    if n < 1:
        raise ValueError("rank must be >= 1")
    mat = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, cij: int = -1, cji: int = -1) -> None:
        mat[i][j] = cij
        mat[j][i] = cji

    if kind == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif kind == "B":
        if n < 2:
            raise ValueError("type B needs rank >= 2")
        for i in range(n - 2):
            link(i, i + 1)
        # last simple root is short: pairing of the long neighbour
        # against the short coroot is -2
        link(n - 2, n - 1, -1, -2)
    elif kind == "C":
        if n < 2:
            raise ValueError("type C needs rank >= 2")
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)
    elif kind == "D":
        if n < 2:
            raise ValueError("type D needs rank >= 2")
        for i in range(n - 3):
            link(i, i + 1)
        if n >= 3:
            link(n - 3, n - 2)
            link(n - 3, n - 1)
    elif kind == "G":
        if n != 2:
            raise ValueError("type G needs rank 2")
        link(0, 1, -1, -3)
    else:
        raise ValueError(f"unknown type {kind!r}")
    return mat


def validate_cartan(mat: Sequence[Sequence[int]]) -> None:
    n = len(mat)
    for row in mat:
        if len(row) != n:
            raise ValueError("Cartan matrix must be square")
    for i in range(n):
        if mat[i][i] != 2:
            raise ValueError("Cartan matrix diagonal must be 2")
        for j in range(n):
            if i != j:
                if mat[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")
                if (mat[i][j] == 0) != (mat[j][i] == 0):
                    raise ValueError("Cartan zero pattern must be symmetric")


# ---------------------------------------------------------------------------
# Root datum
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootDatum:
    """Roots and coroots in dual integer lattices of a common rank.

    ``roots[k]`` and ``coroots[k]`` form a pair; ``simple`` lists the
    indices of the simple pairs.  The pairing of a character with a
    cocharacter is the dot product of coordinate tuples.
    """

    ambient_rank: int
    roots: tuple[IVec, ...]
    coroots: tuple[IVec, ...]
    simple: tuple[int, ...]
    label: str = "custom"
    _coeff_cache: dict = field(default_factory=dict, compare=False, repr=False)

    # -- basic queries ------------------------------------------------

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple)

    def pairing(self, char: Sequence, cochar: Sequence) -> Q:
        return _linalg.dot(_linalg.qvec(char), _linalg.qvec(cochar))

    def root_index(self, vec: IVec) -> int:
        try:
            return self.roots.index(tuple(vec))
        except ValueError:
            raise KeyError(f"{vec} is not a root") from None

    def simple_roots(self) -> list[IVec]:
        return [self.roots[k] for k in self.simple]

    def simple_coroots(self) -> list[IVec]:
        return [self.coroots[k] for k in self.simple]

    def simple_coefficients(self, vec: Sequence) -> tuple[Q, ...] | None:
        """Coefficients of ``vec`` over the simple roots, or None."""
        key = tuple(vec)
        if key not in self._coeff_cache:
            cols = _linalg.transpose([_linalg.qvec(r) for r in self.simple_roots()])
            self._coeff_cache[key] = _linalg.solve(cols, _linalg.qvec(key))
        return self._coeff_cache[key]

    def is_positive_root(self, vec: Sequence) -> bool:
        if tuple(vec) not in self.roots:
            return False
        coeffs = self.simple_coefficients(vec)
        return coeffs is not None and all(c >= 0 for c in coeffs)

    def positive_roots(self) -> list[int]:
        return [k for k, a in enumerate(self.roots) if self.is_positive_root(a)]

    # -- reflections ----------------------------------------------------

    def reflect_character(self, pair_index: int, x: Sequence[Q]) -> tuple[Q, ...]:
        """x - <x, coroot> root, for the pair at ``pair_index``."""
        a = self.roots[pair_index]
        av = self.coroots[pair_index]
        c = self.pairing(x, av)
        return tuple(Q(xi) - c * ai for xi, ai in zip(x, a))

    def reflect_cocharacter(self, pair_index: int, lam: Sequence[Q]) -> tuple[Q, ...]:
        """lam - <root, lam> coroot, for the pair at ``pair_index``."""
        a = self.roots[pair_index]
        av = self.coroots[pair_index]
        c = self.pairing(a, lam)
        return tuple(Q(li) - c * vi for li, vi in zip(lam, av))

    def is_dominant_coweight(self, lam: Sequence) -> bool:
        return all(self.pairing(a, lam) >= 0 for a in self.simple_roots())

    # -- derived geometry ----------------------------------------------

    def fundamental_coweights(self) -> list[tuple[Q, ...]]:
        """One rational coweight per simple root, pairing to delta_ij.

        Free coordinates (central directions) are set to zero, so for the
        built-in realizations the result has integer entries.
        """
        rows = [_linalg.qvec(a) for a in self.simple_roots()]
        out = []
        for j in range(len(rows)):
            rhs = [Q(1) if i == j else Q(0) for i in range(len(rows))]
            sol = _linalg.solve(rows, rhs)
            if sol is None:
                raise ValueError("simple roots are linearly dependent")
            out.append(sol)
        return out

    def dynkin_components(self) -> list[list[int]]:
        """Connected components of the Dynkin diagram, as lists of
        positions into ``simple``."""
        m = self.semisimple_rank
        seen: set[int] = set()
        comps: list[list[int]] = []
        simples = self.simple_roots()
        cosimples = self.simple_coroots()
        for start in range(m):
            if start in seen:
                continue
            comp = [start]
            seen.add(start)
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(m):
                    if j not in seen and self.pairing(simples[j], cosimples[i]) != 0:
                        seen.add(j)
                        comp.append(j)
                        stack.append(j)
            comps.append(sorted(comp))
        return comps

    def highest_root_marks(self, component: list[int]) -> dict[int, Q]:
        """Simple-root coefficients of the highest root of a component."""
        best: tuple[Q, dict[int, Q]] | None = None
        for a in self.roots:
            coeffs = self.simple_coefficients(a)
            if coeffs is None or any(c < 0 for c in coeffs):
                continue
            support = {i for i, c in enumerate(coeffs) if c != 0}
            if not support or not support.issubset(set(component)):
                continue
            total = sum(coeffs)
            if best is None or total > best[0]:
                best = (total, {i: coeffs[i] for i in component})
        if best is None:
            raise ValueError("component has no roots")
        return best[1]

    def base_alcove_barycenter(self) -> tuple[Q, ...]:
        """Interior point of the fundamental alcove: average of the
        alcove vertices (origin and fundamental coweights scaled by the
        inverse highest-root marks), taken per Dynkin component."""
        omegas = self.fundamental_coweights()
        x = [Q(0)] * self.ambient_rank
        for comp in self.dynkin_components():
            marks = self.highest_root_marks(comp)
            acc = [Q(0)] * self.ambient_rank
            for i in comp:
                acc = list(_linalg.vec_add(acc, _linalg.vec_scale(Q(1) / marks[i], omegas[i])))
            scale = Q(1, len(comp) + 1)
            x = list(_linalg.vec_add(x, _linalg.vec_scale(scale, acc)))
        return tuple(x)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def _generate_root_pairs(simple_pairs: list[tuple[IVec, IVec]]
                         ) -> tuple[tuple[IVec, ...], tuple[IVec, ...], tuple[int, ...]]:
    """Close the simple pairs under all simple reflections."""
    def reflect_pair(i: int, pair: tuple[IVec, IVec]) -> tuple[IVec, IVec]:
        sa, sav = simple_pairs[i]
        a, av = pair
        ca = sum(x * y for x, y in zip(a, sav))
        new_a = tuple(x - ca * y for x, y in zip(a, sa))
        cv = sum(x * y for x, y in zip(sa, av))
        new_av = tuple(x - cv * y for x, y in zip(av, sav))
        return new_a, new_av

    found: dict[IVec, IVec] = {a: av for a, av in simple_pairs}
    queue = list(simple_pairs)
    while queue:
        pair = queue.pop()
        for i in range(len(simple_pairs)):
            na, nav = reflect_pair(i, pair)
            if na not in found:
                found[na] = nav
                queue.append((na, nav))
            elif found[na] != nav:
                raise ValueError("inconsistent root/coroot closure")
        if len(found) > 4 * MAX_WEYL_ORDER:
            raise ValueError("root system too large")

    ordering = sorted(found, key=lambda a: (sum(a) < 0, [abs(c) for c in a], a))
    roots = tuple(ordering)
    coroots = tuple(found[a] for a in ordering)
    simple = tuple(roots.index(a) for a, _ in simple_pairs)
    return roots, coroots, simple


def datum_from_cartan(mat: Sequence[Sequence[int]], central_rank: int = 0,
                      label: str | None = None) -> RootDatum:
    validate_cartan(mat)
    n = len(mat)
    ambient = n + central_rank
    simple_pairs = []
    for i in range(n):
        root = tuple(1 if j == i else 0 for j in range(ambient))
        coroot = tuple(list(mat[i]) + [0] * central_rank)
        simple_pairs.append((root, coroot))
    if not simple_pairs:
        return RootDatum(ambient, (), (), (), label or "torus")
    roots, coroots, simple = _generate_root_pairs(simple_pairs)
    return RootDatum(ambient, roots, coroots, simple, label or "cartan")


def datum_general_linear(n: int) -> RootDatum:
    """GL_n realization: characters and cocharacters both Z^n, roots and
    coroots the difference vectors e_i - e_j."""
    if n < 2:
        raise ValueError("general-linear realization needs n >= 2")
    pairs = []
    for i in range(n):
        for j in range(n):
            if i != j:
                v = tuple(1 if k == i else (-1 if k == j else 0) for k in range(n))
                pairs.append((v, v))
    pairs.sort(key=lambda p: p[0], reverse=True)
    roots = tuple(a for a, _ in pairs)
    coroots = tuple(av for _, av in pairs)
    simple = tuple(roots.index(tuple(1 if k == i else (-1 if k == i + 1 else 0)
                                     for k in range(n)))
                   for i in range(n - 1))
    return RootDatum(n, roots, coroots, simple, f"GL{n}")


def datum_from_config(cfg: dict) -> RootDatum:
    """Build a datum from a plain JSON-style dict.

    Accepted shapes::

        {"type": "A"|"B"|"C"|"D"|"G", "n": r, "central_rank": k}
        {"type": "GL", "n": n}
        {"cartan": [[...], ...], "central_rank": k}
    """
    if "cartan" in cfg:
        return datum_from_cartan(cfg["cartan"], int(cfg.get("central_rank", 0)))
    kind = cfg.get("type")
    if kind is None:
        raise ValueError("config needs a 'type' or 'cartan' entry")
    n = int(cfg["n"])
    central = int(cfg.get("central_rank", 0))
    if kind == "GL":
        if central:
            raise ValueError("the general-linear realization fixes its own center")
        return datum_general_linear(n)
    label = f"{kind}{n}"
    if central:
        label += f"+Z{central}"
    return datum_from_cartan(cartan_matrix(kind, n), central, label)


def datum_to_dict(datum: RootDatum) -> dict:
    return {
        "label": datum.label,
        "ambient_rank": datum.ambient_rank,
        "roots": [list(a) for a in datum.roots],
        "coroots": [list(a) for a in datum.coroots],
        "simple_indices": list(datum.simple),
        "positive_indices": datum.positive_roots(),
    }


# ---------------------------------------------------------------------------
# Weyl group
# ---------------------------------------------------------------------------

IMat = tuple[IVec, ...]


@dataclass(frozen=True, eq=False)
class WeylElement:
    """Group element, canonical by its cocharacter action matrix."""

    cochar_mat: IMat
    char_mat: IMat
    word: tuple[int, ...]

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.cochar_mat == other.cochar_mat

    def __hash__(self) -> int:
        return hash(self.cochar_mat)

    @property
    def length(self) -> int:
        return len(self.word)

    def __repr__(self) -> str:
        name = "*".join(f"s{i}" for i in self.word) or "e"
        return f"<{name}>"


def _imat_identity(n: int) -> IMat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _imat_mul(a: IMat, b: IMat) -> IMat:
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def _imat_vec(m: IMat, v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


class WeylGroup:
    """Finite Weyl group of a datum, fully enumerated.

    Enumeration aborts with ValueError if the order would exceed
    ``MAX_WEYL_ORDER``; the library targets small-rank exact checks, not
    large-scale Coxeter combinatorics.
    """

    def __init__(self, datum: RootDatum, max_order: int = MAX_WEYL_ORDER):
        self.datum = datum
        n = datum.ambient_rank
        self._simple_char: list[IMat] = []
        self._simple_cochar: list[IMat] = []
        for k in datum.simple:
            a = datum.roots[k]
            av = datum.coroots[k]
            char = tuple(tuple((1 if r == c else 0) - a[r] * av[c] for c in range(n))
                         for r in range(n))
            self._simple_char.append(char)
            self._simple_cochar.append(tuple(zip(*char)))

        self.identity = WeylElement(_imat_identity(n), _imat_identity(n), ())
        self._by_mat: dict[IMat, WeylElement] = {self.identity.cochar_mat: self.identity}
        order = [self.identity]
        frontier = [self.identity]
        while frontier:
            new: list[WeylElement] = []
            for w in frontier:
                for i in range(len(self._simple_char)):
                    cochar = _imat_mul(w.cochar_mat, self._simple_cochar[i])
                    if cochar in self._by_mat:
                        continue
                    char = _imat_mul(w.char_mat, self._simple_char[i])
                    elt = WeylElement(cochar, char, w.word + (i,))
                    self._by_mat[cochar] = elt
                    new.append(elt)
                    if len(self._by_mat) > max_order:
                        raise ValueError(
                            f"Weyl group larger than cap {max_order}")
            order.extend(new)
            frontier = new
        self.elements: list[WeylElement] = order

        self._inverse: dict[IMat, WeylElement] = {}
        for w in self.elements:
            acc = self.identity
            for i in reversed(w.word):
                acc = self.mul(acc, self.simple_reflection(i))
            self._inverse[w.cochar_mat] = acc

    def __len__(self) -> int:
        return len(self.elements)

    def simple_reflection(self, i: int) -> WeylElement:
        return self._by_mat[self._simple_cochar[i]]

    def canonical(self, w: WeylElement) -> WeylElement:
        return self._by_mat[w.cochar_mat]

    def mul(self, a: WeylElement, b: WeylElement) -> WeylElement:
        return self._by_mat[_imat_mul(a.cochar_mat, b.cochar_mat)]

    def inv(self, w: WeylElement) -> WeylElement:
        return self._inverse[w.cochar_mat]

    def act_character(self, w: WeylElement, x: Sequence) -> tuple:
        return _imat_vec(w.char_mat, x)

    def act_cocharacter(self, w: WeylElement, lam: Sequence) -> tuple:
        return _imat_vec(w.cochar_mat, lam)

    def reflection_for_root(self, root: IVec) -> WeylElement:
        """The reflection attached to any root, as a group element."""
        k = self.datum.root_index(root)
        a = self.datum.roots[k]
        av = self.datum.coroots[k]
        n = self.datum.ambient_rank
        char = tuple(tuple((1 if r == c else 0) - a[r] * av[c] for c in range(n))
                     for r in range(n))
        cochar = tuple(zip(*char))
        return self._by_mat[cochar]

    def word_element(self, word: Iterable[int]) -> WeylElement:
        acc = self.identity
        for i in word:
            acc = self.mul(acc, self.simple_reflection(i))
        return acc

    def subgroup_elements(self, simple_subset: Iterable[int]) -> list[WeylElement]:
        """All elements of the standard parabolic subgroup generated by
        the simple reflections at the given positions."""
        gens = [self.simple_reflection(i) for i in simple_subset]
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            new = []
            for w in frontier:
                for g in gens:
                    nxt = self.mul(w, g)
                    if nxt not in seen:
                        seen.add(nxt)
                        new.append(nxt)
            frontier = new
        return sorted(seen, key=lambda w: (w.length, w.word))

    def orbit_cocharacter(self, lam: Sequence) -> set[tuple]:
        lam = tuple(lam)
        seen = {lam}
        frontier = [lam]
        while frontier:
            new = []
            for v in frontier:
                for i in range(len(self._simple_cochar)):
                    nxt = _imat_vec(self._simple_cochar[i], v)
                    if nxt not in seen:
                        seen.add(nxt)
                        new.append(nxt)
            frontier = new
        return seen

    def dominant_in_orbit(self, lam: Sequence) -> tuple:
        doms = [v for v in self.orbit_cocharacter(lam)
                if self.datum.is_dominant_coweight(v)]
        if len(doms) != 1:
            raise AssertionError("orbit must contain exactly one dominant point")
        return doms[0]


def coset_split_minimal(group: WeylGroup, w: WeylElement,
                        theta: Sequence[int]) -> tuple[WeylElement, WeylElement]:
    """Write ``w = u * v`` with ``u`` in the standard parabolic subgroup
    for ``theta`` (positions into the simple list) and ``v`` the minimal
    representative of its coset: ``v^{-1}`` sends every theta-simple
    root to a positive root.  Lengths add up."""
    datum = group.datum
    u = group.identity
    v = w
    while True:
        vinv = group.inv(v)
        for i in theta:
            a = datum.roots[datum.simple[i]]
            if not datum.is_positive_root(group.act_character(vinv, a)):
                s = group.simple_reflection(i)
                v = group.mul(s, v)
                u = group.mul(u, s)
                break
        else:
            return u, v
