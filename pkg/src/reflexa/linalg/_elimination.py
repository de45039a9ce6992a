"""Row reduction and the subspace operations built on it.

Over Q the forward pass is fraction-free (Bareiss): each row is first
cleared of denominators, elimination runs on integers with exact
division by the previous pivot, and only the final back substitution
returns to fractions.  Over GF(p) plain Gauss-Jordan is used.  Both
choose the leftmost pivot column and, within it, the first nonzero row,
so every basis produced here is reproducible.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction
from math import lcm
from typing import Any

from ._field import (
    DimensionError,
    Field,
    NotInvertibleError,
    RationalField,
)
from ._matrix import Matrix, Vector, hstack, linear_combination

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# rref
# ---------------------------------------------------------------------------

def _bareiss_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    ints: list[list[int]] = []
    for r in rows:
        d = lcm(*(x.denominator for x in r)) if r else 1
        ints.append([int(x * d) for x in r])

    n = len(ints)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == n:
            break
        k = next((i for i in range(r, n) if ints[i][c] != 0), None)
        if k is None:
            continue
        if k != r:
            ints[k], ints[r] = ints[r], ints[k]
        p = ints[r][c]
        prow = ints[r]
        for i in range(r + 1, n):
            row = ints[i]
            a = row[c]
            for j in range(c + 1, ncols):
                row[j] = (p * row[j] - a * prow[j]) // prev
            row[c] = 0
        prev = p
        pivots.append(c)
        r += 1

    out = [[Fraction(x) for x in row] for row in ints]
    for k, c in enumerate(pivots):
        inv = 1 / out[k][c]
        out[k] = [x * inv for x in out[k]]
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        pk = out[k]
        for i in range(k):
            a = out[i][c]
            if a:
                out[i] = [x - a * y for x, y in zip(out[i], pk)]
    return out, pivots


def _gauss_jordan_rows(field: Field, rows: list[list[Any]], ncols: int) -> tuple[list[list[Any]], list[int]]:
    n = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == n:
            break
        k = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if k is None:
            continue
        if k != r:
            rows[k], rows[r] = rows[r], rows[k]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        prow = rows[r]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                a = rows[i][c]
                rows[i] = [field.sub(x, field.mul(a, y)) for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form and pivot columns of ``m``.

    The rank of ``m`` is ``len(pivots)``.
    """
    rows = [list(m.row(i)) for i in range(m.rows)]
    if isinstance(m.field, RationalField):
        out, pivots = _bareiss_rows(rows, m.cols)
    else:
        out, pivots = _gauss_jordan_rows(m.field, rows, m.cols)
    data = tuple(x for row in out for x in row)
    return Matrix._raw(m.field, m.rows, m.cols, data), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


# ---------------------------------------------------------------------------
# Kernel, image, solve
# ---------------------------------------------------------------------------

def _kernel_from_rref(field: Field, r: Matrix, pivots: list[int], ncols: int) -> list[Vector]:
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for k, c in enumerate(pivots):
            v[c] = field.neg(r[k, free])
        basis.append(tuple(v))
    return basis


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of the null space, one vector per free column in increasing order."""
    r, pivots = rref(m)
    return _kernel_from_rref(m.field, r, pivots, m.cols)


def image_basis(m: Matrix) -> list[Vector]:
    """Basis of the column space: the pivot columns of ``m`` itself."""
    _, pivots = rref(m)
    return [m.column(c) for c in pivots]


def solve(m: Matrix, b: Sequence[Any]) -> Vector | None:
    """A solution of ``m x = b`` with free variables set to zero, or ``None``."""
    if len(b) != m.rows:
        raise DimensionError(f"right-hand side has length {len(b)}, matrix has {m.rows} rows")
    f = m.field
    aug = hstack(f, [m, Matrix.column_vector(f, list(b))])
    r, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [f.zero] * m.cols
    for k, c in enumerate(pivots):
        x[c] = r[k, m.cols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise DimensionError(f"cannot invert a {m.rows}x{m.cols} matrix")
    n = m.rows
    f = m.field
    r, pivots = rref(hstack(f, [m, Matrix.identity(f, n)]))
    if pivots[:n] != list(range(n)):
        raise NotInvertibleError("matrix is singular")
    return r.submatrix(range(n), range(n, 2 * n))


def determinant(m: Matrix) -> Any:
    if m.rows != m.cols:
        raise DimensionError(f"determinant of a {m.rows}x{m.cols} matrix")
    f = m.field
    rows = [list(m.row(i)) for i in range(m.rows)]
    det = f.one
    n = m.rows
    for c in range(n):
        k = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if k is None:
            return f.zero
        if k != c:
            rows[k], rows[c] = rows[c], rows[k]
            det = f.neg(det)
        p = rows[c][c]
        det = f.mul(det, p)
        inv = f.inv(p)
        for i in range(c + 1, n):
            a = f.mul(rows[i][c], inv)
            if a:
                rows[i] = [f.sub(x, f.mul(a, y)) for x, y in zip(rows[i], rows[c])]
    return det


# ---------------------------------------------------------------------------
# Subspaces given by generator lists
# ---------------------------------------------------------------------------

def _check_dims(dim: int, vectors: Sequence[Sequence[Any]]) -> None:
    for v in vectors:
        if len(v) != dim:
            raise DimensionError(f"vector of length {len(v)} in ambient dimension {dim}")


def span_basis(field: Field, dim: int, vectors: Sequence[Sequence[Any]]) -> list[Vector]:
    """Canonical basis (nonzero rref rows) of the span of ``vectors``.

    Dependent and zero generators are accepted.
    """
    _check_dims(dim, vectors)
    if not vectors:
        return []
    r, pivots = rref(Matrix.from_rows(field, vectors, dim))
    return [r.row(k) for k in range(len(pivots))]


def in_span(field: Field, dim: int, basis: Sequence[Sequence[Any]], v: Sequence[Any]) -> bool:
    _check_dims(dim, [*basis, v])
    if not basis:
        return all(x == 0 for x in v)
    return solve(Matrix.from_columns(field, basis, dim), v) is not None


def intersect_subspaces(field: Field, dim: int, bases: Sequence[Sequence[Sequence[Any]]]) -> list[Vector]:
    """Basis of the intersection of the spans of ``bases``.

    Pairs are intersected through the kernel of ``[U | -V]``: a kernel
    vector ``(a, b)`` gives the common element ``U a``.  With no bases the
    whole ambient space is returned.
    """
    for b in bases:
        _check_dims(dim, b)
    if not bases:
        return [field.unit_vector(dim, k) for k in range(dim)]
    current = span_basis(field, dim, bases[0])
    for other in bases[1:]:
        other = span_basis(field, dim, other)
        if not current or not other:
            return []
        cols = list(current) + [tuple(field.neg(x) for x in v) for v in other]
        kernel = kernel_basis(Matrix.from_columns(field, cols, dim))
        k = len(current)
        common = [linear_combination(field, z[:k], current, dim) for z in kernel]
        current = span_basis(field, dim, common)
        logger.debug("intersection step: dim %d", len(current))
    return current


def same_span(field: Field, dim: int, a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> bool:
    return span_basis(field, dim, a) == span_basis(field, dim, b)
