"""Dense exact matrices.

A ``Matrix`` stores its entries as a flat row-major tuple of raw field
elements (see ``Field``).  Instances are immutable; every operation
returns a new matrix.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from typing import Any

from ._field import (
    DimensionError,
    Field,
    FieldScalar,
    check_same_field,
)

Vector = tuple


class Matrix:
    """An immutable ``rows x cols`` matrix over a single field."""

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, field: Field, rows: int, cols: int, entries: Iterable[Any]) -> None:
        if rows < 0 or cols < 0:
            raise DimensionError(f"negative matrix shape {rows}x{cols}")
        data = tuple(field.coerce(e) for e in entries)
        if len(data) != rows * cols:
            raise DimensionError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(data)}"
            )
        self.field = field
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def _raw(cls, field: Field, rows: int, cols: int, data: tuple) -> Matrix:
        """Build from already reduced raw entries without re-coercion."""
        m = cls.__new__(cls)
        m.field = field
        m.rows = rows
        m.cols = cols
        m._data = data
        return m

    # -- Constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: Field, rows: int, cols: int) -> Matrix:
        return cls._raw(field, rows, cols, (field.zero,) * (rows * cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        z, o = field.zero, field.one
        return cls._raw(field, n, n, tuple(o if i == j else z for i in range(n) for j in range(n)))

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence[Any]], cols: int | None = None) -> Matrix:
        """Build from a list of rows; ``cols`` is required when ``rows`` is empty."""
        if cols is None:
            if not rows:
                raise DimensionError("cannot infer column count of an empty row list")
            cols = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise DimensionError(f"row {i} has {len(r)} entries, expected {cols}")
        return cls(field, len(rows), cols, (e for r in rows for e in r))

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence[Any]], rows: int | None = None) -> Matrix:
        """Build from a list of column vectors; ``rows`` is required when empty."""
        if rows is None:
            if not columns:
                raise DimensionError("cannot infer row count of an empty column list")
            rows = len(columns[0])
        return cls.from_rows(field, columns, rows).transpose()

    @classmethod
    def column_vector(cls, field: Field, values: Sequence[Any]) -> Matrix:
        return cls(field, len(values), 1, values)

    @classmethod
    def row_vector(cls, field: Field, values: Sequence[Any]) -> Matrix:
        return cls(field, 1, len(values), values)

    # -- Access --------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple:
        """Row-major raw entries."""
        return self._data

    def __getitem__(self, index: tuple[int, int]) -> Any:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index ({i}, {j}) out of range for {self.rows}x{self.cols}")
        return self._data[i * self.cols + j]

    def scalar(self, i: int, j: int) -> FieldScalar:
        return FieldScalar(self.field, self[i, j])

    def row(self, i: int) -> Vector:
        c = self.cols
        return self._data[i * c:(i + 1) * c]

    def column(self, j: int) -> Vector:
        return self._data[j::self.cols] if self.cols else ()

    def row_list(self) -> list[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def column_list(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        d, c = self._data, self.cols
        return Matrix._raw(self.field, len(rows), len(cols), tuple(d[i * c + j] for i in rows for j in cols))

    # -- Algebra -------------------------------------------------------------

    def transpose(self) -> Matrix:
        r, c, d = self.rows, self.cols, self._data
        return Matrix._raw(self.field, c, r, tuple(d[i * c + j] for j in range(c) for i in range(r)))

    @property
    def T(self) -> Matrix:
        return self.transpose()

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        f = check_same_field(self.field, other.field)
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        n, m = self.cols, other.cols
        a, b = self._data, other._data
        bcols = [b[j::m] for j in range(m)] if m else []
        out = []
        for i in range(self.rows):
            row = a[i * n:(i + 1) * n]
            for col in bcols:
                out.append(f.reduce(sum(x * y for x, y in zip(row, col) if x and y)))
        return Matrix._raw(f, self.rows, m, tuple(out))

    def apply(self, vector: Sequence[Any]) -> Vector:
        """Multiply this matrix by a column vector of raw elements."""
        if len(vector) != self.cols:
            raise DimensionError(f"vector of length {len(vector)} for {self.rows}x{self.cols} matrix")
        f, c, d = self.field, self.cols, self._data
        return tuple(
            f.reduce(sum(x * y for x, y in zip(d[i * c:(i + 1) * c], vector) if x and y))
            for i in range(self.rows)
        )

    def _same_shape(self, other: Matrix) -> Field:
        f = check_same_field(self.field, other.field)
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return f

    def __add__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        f = self._same_shape(other)
        return Matrix._raw(f, self.rows, self.cols, tuple(f.add(x, y) for x, y in zip(self._data, other._data)))

    def __sub__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        f = self._same_shape(other)
        return Matrix._raw(f, self.rows, self.cols, tuple(f.sub(x, y) for x, y in zip(self._data, other._data)))

    def __neg__(self) -> Matrix:
        f = self.field
        return Matrix._raw(f, self.rows, self.cols, tuple(f.neg(x) for x in self._data))

    def scale(self, c: Any) -> Matrix:
        f = self.field
        c = f.coerce(c)
        return Matrix._raw(f, self.rows, self.cols, tuple(f.mul(c, x) for x in self._data))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._data)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.field, self.rows)

    # -- Equality ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self._data == other._data
        )

    def __hash__(self) -> int:
        return hash((self.field, self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(self.field.format(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix<{self.field} {self.rows}x{self.cols}>[{body}]"

    # -- Serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        fmt = self.field.format
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[fmt(x) for x in self.row(i)] for i in range(self.rows)],
        }

    @classmethod
    def from_dict(cls, field: Field, data: dict) -> Matrix:
        rows, cols = int(data["rows"]), int(data["cols"])
        entries = data["entries"]
        if len(entries) != rows:
            raise DimensionError(f"declared {rows} rows, found {len(entries)}")
        return cls.from_rows(field, entries, cols)


# ---------------------------------------------------------------------------
# Block constructions
# ---------------------------------------------------------------------------

def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; basis vector e_i (x) e_j sits at position ``i * b.cols + j``."""
    f = check_same_field(a.field, b.field)
    ar, ac, br, bc = a.rows, a.cols, b.rows, b.cols
    ad, bd = a._data, b._data
    out = []
    for i in range(ar):
        arow = ad[i * ac:(i + 1) * ac]
        for k in range(br):
            brow = bd[k * bc:(k + 1) * bc]
            for x in arow:
                if x:
                    out.extend(f.reduce(x * y) for y in brow)
                else:
                    out.extend((f.zero,) * bc)
    return Matrix._raw(f, ar * br, ac * bc, tuple(out))


def hstack(field: Field, blocks: Sequence[Matrix], rows: int | None = None) -> Matrix:
    """Place matrices side by side."""
    if not blocks:
        return Matrix.zero(field, rows or 0, 0)
    r = blocks[0].rows
    for b in blocks:
        check_same_field(field, b.field)
        if b.rows != r:
            raise DimensionError(f"hstack row mismatch {b.rows} vs {r}")
    data = []
    for i in range(r):
        for b in blocks:
            data.extend(b.row(i))
    return Matrix._raw(field, r, sum(b.cols for b in blocks), tuple(data))


def vstack(field: Field, blocks: Sequence[Matrix], cols: int | None = None) -> Matrix:
    """Place matrices on top of each other."""
    if not blocks:
        return Matrix.zero(field, 0, cols or 0)
    c = blocks[0].cols
    for b in blocks:
        check_same_field(field, b.field)
        if b.cols != c:
            raise DimensionError(f"vstack column mismatch {b.cols} vs {c}")
    return Matrix._raw(field, sum(b.rows for b in blocks), c, tuple(x for b in blocks for x in b._data))


def block_diag(field: Field, blocks: Sequence[Matrix]) -> Matrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    data = [field.zero] * (rows * cols)
    r0 = c0 = 0
    for b in blocks:
        check_same_field(field, b.field)
        for i in range(b.rows):
            for j in range(b.cols):
                data[(r0 + i) * cols + c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return Matrix._raw(field, rows, cols, tuple(data))


def vector_add(field: Field, a: Sequence[Any], b: Sequence[Any]) -> Vector:
    if len(a) != len(b):
        raise DimensionError(f"vector length mismatch {len(a)} vs {len(b)}")
    return tuple(field.add(x, y) for x, y in zip(a, b))


def vector_scale(field: Field, c: Any, v: Sequence[Any]) -> Vector:
    return tuple(field.mul(c, x) for x in v)


def linear_combination(field: Field, coeffs: Sequence[Any], vectors: Sequence[Sequence[Any]], dim: int) -> Vector:
    """``sum(c_k * v_k)`` as a vector of length ``dim``."""
    acc = [0] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for i, x in enumerate(v):
                if x:
                    acc[i] += c * x
    return tuple(field.reduce(x) for x in acc)


def kron_vector(field: Field, x: Sequence[Any], y: Sequence[Any]) -> Vector:
    """Coordinates of ``x (x) y`` under the (i, j)-major convention."""
    return tuple(field.mul(a, b) for a in x for b in y)
