"""Exact linear algebra over the rationals.

Everything here works on lists of lists of Fraction (or int; values are
coerced).  Matrices are small (rank of a root system, number of group
elements in a class sum), so dense Gaussian elimination is fine and keeps
results exact.
"""
from __future__ import annotations

from fractions import Fraction as Q
from typing import Iterable, Sequence

Vec = tuple[Q, ...]


def qvec(xs: Iterable) -> Vec:
    return tuple(Q(x) for x in xs)


def vec_add(u: Sequence[Q], v: Sequence[Q]) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Sequence[Q], v: Sequence[Q]) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c, v: Sequence[Q]) -> Vec:
    c = Q(c)
    return tuple(c * a for a in v)


def dot(u: Sequence[Q], v: Sequence[Q]) -> Q:
    return sum((a * b for a, b in zip(u, v, strict=True)), Q(0))


def mat_vec(m: Sequence[Sequence[Q]], v: Sequence[Q]) -> Vec:
    return tuple(dot(row, v) for row in m)


def mat_mul(a: Sequence[Sequence[Q]], b: Sequence[Sequence[Q]]) -> list[list[Q]]:
    bt = list(zip(*b))
    return [[dot(row, col) for col in bt] for row in a]


def identity(n: int) -> list[list[Q]]:
    return [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence[Q]]) -> list[list[Q]]:
    return [list(col) for col in zip(*m)]


def _echelon(rows: list[list[Q]]) -> tuple[list[list[Q]], list[int]]:
    """Row-reduce in place; return (reduced rows, pivot column indices)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Q(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def mat_rank(m: Sequence[Sequence]) -> int:
    rows = [[Q(x) for x in row] for row in m]
    _, pivots = _echelon(rows)
    return len(pivots)


def nullspace(m: Sequence[Sequence]) -> list[Vec]:
    """Basis of {v : m @ v = 0}, exact."""
    if not m:
        return []
    ncols = len(m[0])
    rows = [[Q(x) for x in row] for row in m]
    rows, pivots = _echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis: list[Vec] = []
    for fc in free:
        v = [Q(0)] * ncols
        v[fc] = Q(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(tuple(v))
    return basis


def solve(m: Sequence[Sequence], b: Sequence) -> Vec | None:
    """One exact solution of m @ x = b, or None if inconsistent."""
    if not m:
        return ()
    ncols = len(m[0])
    rows = [[Q(x) for x in row] + [Q(bi)] for row, bi in zip(m, b, strict=True)]
    rows, pivots = _echelon(rows)
    if ncols in pivots:  # pivot in the augmented column
        return None
    x = [Q(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][ncols]
    return tuple(x)


def inv_matrix(m: Sequence[Sequence]) -> list[list[Q]]:
    """Exact inverse of a square matrix; raises ValueError if singular."""
    n = len(m)
    rows = [[Q(x) for x in row] + ident_row for row, ident_row in zip(m, identity(n))]
    rows, pivots = _echelon(rows)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in rows]
