"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored in the power basis 1, x, ..., x^(phi(m)-1) modulo
the m-th cyclotomic polynomial, with Fraction coefficients, so equality
is literal tuple equality and nothing is ever rounded.  The conductor
is fixed per element; mixing conductors requires an explicit promote().

Also provides Gaussian elimination over the field (rank, nullspace,
solve) for the intertwiner and isotypic computations in the
character-theory modules.
"""
from __future__ import annotations

from fractions import Fraction as Q
from functools import lru_cache
from typing import Sequence


def _poly_mul(a: tuple, b: tuple) -> tuple:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return tuple(out)


def _poly_divmod(a: Sequence, b: Sequence) -> tuple[tuple, tuple]:
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    q = [0] * max(1, len(a) - db)
    while len(a) - 1 >= db and any(a):
        if not a[-1]:
            a.pop()
            continue
        coef = Q(a[-1], 1) / lead
        pos = len(a) - 1 - db
        q[pos] = coef
        for i, y in enumerate(b):
            a[pos + i] -= coef * y
        a.pop()
    while len(a) > 1 and not a[-1]:
        a.pop()
    return tuple(q), tuple(a)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, low degree first."""
    if m == 1:
        return (-1, 1)
    num = tuple([-1] + [0] * (m - 1) + [1])  # x^m - 1
    den = (1,)
    for d in range(1, m):
        if m % d == 0:
            den = _poly_mul(den, cyclotomic_polynomial(d))
    q, r = _poly_divmod(num, den)
    assert not any(r)
    return tuple(int(c) for c in q)


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[Q, ...], ...]:
    """x^j mod Phi_m for j = 0 .. max(m, 2*phi) - 1, as coefficient
    tuples of length phi(m)."""
    phi_poly = cyclotomic_polynomial(m)
    phi = len(phi_poly) - 1
    size = max(m, 2 * phi)
    table = []
    cur = [Q(0)] * phi
    if phi > 0:
        cur[0] = Q(1)
    for _ in range(size):
        table.append(tuple(cur))
        nxt = [Q(0)] + cur[:]
        if nxt[phi]:
            top = nxt[phi]
            nxt = nxt[:phi]
            for i in range(phi):
                nxt[i] -= top * phi_poly[i]
        else:
            nxt = nxt[:phi]
        cur = nxt
    return tuple(table)


class Cyc:
    """An element of Q(zeta_m) in the power basis mod Phi_m."""

    __slots__ = ("m", "c")

    def __init__(self, m: int, coeffs: Sequence[Q]):
        phi = len(cyclotomic_polynomial(m)) - 1
        if len(coeffs) != phi:
            raise ValueError("coefficient vector has wrong length")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "c", tuple(Q(x) for x in coeffs))

    # construction -----------------------------------------------------
    @staticmethod
    def zero(m: int) -> "Cyc":
        phi = len(cyclotomic_polynomial(m)) - 1
        return Cyc(m, [Q(0)] * phi)

    @staticmethod
    def one(m: int) -> "Cyc":
        return Cyc.rational(m, Q(1))

    @staticmethod
    def rational(m: int, value) -> "Cyc":
        out = list(Cyc.zero(m).c)
        out[0] = Q(value)
        return Cyc(m, out)

    @staticmethod
    def zeta(m: int, k: int = 1) -> "Cyc":
        return Cyc(m, _power_table(m)[k % m])

    # ring ops ---------------------------------------------------------
    def _check(self, other: "Cyc"):
        if self.m != other.m:
            raise ValueError("conductor mismatch; promote() first")

    def __add__(self, other: "Cyc") -> "Cyc":
        self._check(other)
        return Cyc(self.m, [a + b for a, b in zip(self.c, other.c)])

    def __sub__(self, other: "Cyc") -> "Cyc":
        self._check(other)
        return Cyc(self.m, [a - b for a, b in zip(self.c, other.c)])

    def __neg__(self) -> "Cyc":
        return Cyc(self.m, [-a for a in self.c])

    def __mul__(self, other):
        if isinstance(other, (int, Q)):
            return Cyc(self.m, [a * other for a in self.c])
        self._check(other)
        table = _power_table(self.m)
        phi = len(self.c)
        out = [Q(0)] * phi
        for i, x in enumerate(self.c):
            if not x:
                continue
            for j, y in enumerate(other.c):
                if not y:
                    continue
                prod = x * y
                for k, t in enumerate(table[i + j]):
                    if t:
                        out[k] += prod * t
        return Cyc(self.m, out)

    __rmul__ = __mul__

    def scale(self, q) -> "Cyc":
        return Cyc(self.m, [a * Q(q) for a in self.c])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Cyc) and self.m == other.m
                and self.c == other.c)

    def __hash__(self):
        return hash((self.m, self.c))

    def __bool__(self) -> bool:
        return any(self.c)

    def __repr__(self) -> str:
        if not self:
            return "Cyc(0)"
        bits = []
        for j, a in enumerate(self.c):
            if a:
                term = str(a) if j == 0 else (f"z^{j}" if a == 1 else f"{a}*z^{j}")
                bits.append(term)
        return f"Cyc[{self.m}](" + " + ".join(bits) + ")"

    # field structure ---------------------------------------------------
    def galois(self, k: int) -> "Cyc":
        """Apply zeta -> zeta^k; k must be prime to the conductor."""
        import math
        if math.gcd(k, self.m) != 1:
            raise ValueError("not a Galois automorphism")
        table = _power_table(self.m)
        phi = len(self.c)
        out = [Q(0)] * phi
        for j, a in enumerate(self.c):
            if not a:
                continue
            for i, t in enumerate(table[(j * k) % self.m]):
                if t:
                    out[i] += a * t
        return Cyc(self.m, out)

    def conjugate(self) -> "Cyc":
        return self.galois(self.m - 1)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def to_fraction(self) -> Q:
        if not self.is_rational():
            raise ValueError(f"not rational: {self!r}")
        return self.c[0]

    def inv(self) -> "Cyc":
        if not self:
            raise ZeroDivisionError("cyclotomic zero has no inverse")
        from ._linalg import solve
        phi = len(self.c)
        table = _power_table(self.m)
        cols = []
        for j in range(phi):
            col = [Q(0)] * phi
            for i, x in enumerate(self.c):
                if not x:
                    continue
                for k, t in enumerate(table[i + j]):
                    if t:
                        col[k] += x * t
            cols.append(col)
        mat = tuple(tuple(cols[j][i] for j in range(phi)) for i in range(phi))
        e = tuple([Q(1)] + [Q(0)] * (phi - 1))
        sol = solve(mat, e)
        assert sol is not None
        return Cyc(self.m, sol)

    def promote(self, M: int) -> "Cyc":
        """Embed into Q(zeta_M) for m | M via zeta_m = zeta_M^(M/m)."""
        if M % self.m != 0:
            raise ValueError("target conductor must be a multiple")
        step = M // self.m
        out = Cyc.zero(M)
        for j, a in enumerate(self.c):
            if a:
                out = out + Cyc.zeta(M, j * step) * a
        return out


def roots_of_unity(m: int) -> list[Cyc]:
    """All roots of unity inside Q(zeta_m): zeta^j, and -zeta^j for odd m."""
    out = [Cyc.zeta(m, j) for j in range(m)]
    if m % 2 == 1:
        out += [-x for x in out]
    return out


# ---------------------------------------------------------------------------
# linear algebra over the field
# ---------------------------------------------------------------------------

CMat = list


def cyc_matmul(a, b):
    rows, mid, cols = len(a), len(b), len(b[0])
    zero = Cyc.zero(a[0][0].m)
    out = [[zero for _ in range(cols)] for _ in range(rows)]
    for i in range(rows):
        arow = a[i]
        orow = out[i]
        for k in range(mid):
            x = arow[k]
            if not x:
                continue
            brow = b[k]
            for j in range(cols):
                y = brow[j]
                if y:
                    orow[j] = orow[j] + x * y
    return out


def cyc_identity(n: int, m: int):
    one, zero = Cyc.one(m), Cyc.zero(m)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def cyc_trace(a) -> Cyc:
    out = Cyc.zero(a[0][0].m)
    for i in range(len(a)):
        out = out + a[i][i]
    return out


def _cyc_echelon(rows):
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][col].inv()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def cyc_rank(rows) -> int:
    if not rows:
        return 0
    return len(_cyc_echelon(rows)[1])


def cyc_nullspace(rows):
    """Basis of the right kernel of the matrix (list of vectors)."""
    if not rows:
        return []
    m = rows[0][0].m
    ncols = len(rows[0])
    red, pivots = _cyc_echelon(rows)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec = [Cyc.zero(m)] * ncols
        vec[f] = Cyc.one(m)
        for r, p in enumerate(pivots):
            vec[p] = -red[r][f]
        basis.append(vec)
    return basis


def cyc_solve(rows, rhs):
    """One solution of A x = b over the field, or None."""
    if not rows:
        return None
    m = rows[0][0].m
    aug = [list(r) + [v] for r, v in zip(rows, rhs)]
    red, pivots = _cyc_echelon(aug)
    ncols = len(rows[0])
    if ncols in pivots:
        return None
    sol = [Cyc.zero(m)] * ncols
    for r, p in enumerate(pivots):
        sol[p] = red[r][ncols]
    return sol


def cyc_column_space(rows):
    """Basis of the column span: the pivot columns of the matrix."""
    _, pivots = _cyc_echelon([list(r) for r in rows])
    return [[rows[i][p] for i in range(len(rows))] for p in pivots]


def cyc_inv_matrix(a):
    n = len(a)
    m = a[0][0].m
    ident = cyc_identity(n, m)
    red, pivots = _cyc_echelon([list(r) + ident[i] for i, r in enumerate(a)])
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def cyc_solve_matrix(a, b):
    """X with A X = B, for A of full column rank; raises if inconsistent."""
    nc = len(a[0])
    aug = [list(ra) + list(rb) for ra, rb in zip(a, b)]
    red, pivots = _cyc_echelon(aug)
    if pivots != list(range(nc)):
        raise ValueError("coefficient matrix is rank deficient")
    for row in red[nc:]:
        if any(row):
            raise ValueError("inconsistent system")
    return [row[nc:] for row in red[:nc]]
