"""Incremental homogeneous linear systems.

The natural-transformation solver emits many short equations over a
large set of unknowns.  ``LinearSystem`` keeps them as sparse rows in
fully reduced echelon form (every pivot column appears in exactly one
row), so adding an equation costs one reduction pass and the kernel can
be read off at any time.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence
from typing import Any

from ._field import DimensionError, Field
from ._matrix import Matrix, Vector

logger = logging.getLogger(__name__)


class LinearSystem:
    """Equations ``sum(a_c * x_c) = 0`` over ``unknowns`` variables.

    Pivots are the smallest column of each reduced row, so the kernel
    basis (one vector per free column, in increasing order) depends only
    on the solution space and not on the order equations were added.
    """

    def __init__(self, field: Field, unknowns: int) -> None:
        self.field = field
        self.unknowns = unknowns
        self._rows: dict[int, dict[int, Any]] = {}
        self.equations_seen = 0

    # -- Building ------------------------------------------------------------

    def add_equation(self, coeffs: Mapping[int, Any] | Sequence[Any]) -> bool:
        """Add one equation; returns ``True`` when it raised the rank."""
        f = self.field
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            if len(coeffs) != self.unknowns:
                raise DimensionError(
                    f"equation has {len(coeffs)} coefficients, system has {self.unknowns} unknowns"
                )
            items = enumerate(coeffs)
        row: dict[int, Any] = {}
        for c, a in items:
            if not 0 <= c < self.unknowns:
                raise DimensionError(f"unknown {c} out of range 0..{self.unknowns - 1}")
            a = f.reduce(a)
            if a != 0:
                row[c] = f.add(row.get(c, f.zero), a)
        self.equations_seen += 1
        return self._insert(row)

    def add_equations(self, rows: Iterable[Mapping[int, Any] | Sequence[Any]]) -> None:
        for r in rows:
            self.add_equation(r)

    def _insert(self, row: dict[int, Any]) -> bool:
        f = self.field
        for c in [c for c in row if c in self._rows]:
            a = row.get(c)
            if not a:
                continue
            for k, v in self._rows[c].items():
                nv = f.sub(row.get(k, f.zero), f.mul(a, v))
                if nv == 0:
                    row.pop(k, None)
                else:
                    row[k] = nv
        row = {k: v for k, v in row.items() if v != 0}
        if not row:
            return False
        p = min(row)
        inv = f.inv(row[p])
        row = {k: f.mul(inv, v) for k, v in row.items()}
        for q, other in self._rows.items():
            a = other.get(p)
            if a:
                for k, v in row.items():
                    nv = f.sub(other.get(k, f.zero), f.mul(a, v))
                    if nv == 0:
                        other.pop(k, None)
                    else:
                        other[k] = nv
        self._rows[p] = row
        return True

    # -- Queries -------------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivot_columns(self) -> list[int]:
        return sorted(self._rows)

    @property
    def free_columns(self) -> list[int]:
        return [c for c in range(self.unknowns) if c not in self._rows]

    def kernel_basis(self) -> list[Vector]:
        """One kernel vector per free column: 1 there, 0 at the other free columns."""
        f = self.field
        basis = []
        for free in self.free_columns:
            v = [f.zero] * self.unknowns
            v[free] = f.one
            for p, row in self._rows.items():
                a = row.get(free)
                if a:
                    v[p] = f.neg(a)
            basis.append(tuple(v))
        logger.debug(
            "linear system: %d unknowns, %d equations, rank %d, kernel %d",
            self.unknowns, self.equations_seen, self.rank, len(basis),
        )
        return basis

    def contains(self, vector: Sequence[Any]) -> bool:
        if len(vector) != self.unknowns:
            raise DimensionError(f"vector of length {len(vector)} for {self.unknowns} unknowns")
        f = self.field
        return all(
            f.reduce(sum(v * vector[k] for k, v in row.items())) == 0
            for row in self._rows.values()
        )

    def coordinates(self, vector: Sequence[Any]) -> Vector:
        """Coordinates of a kernel vector in ``kernel_basis()``: its values at the free columns."""
        return tuple(vector[c] for c in self.free_columns)

    def to_matrix(self) -> Matrix:
        f = self.field
        rows = []
        for p in self.pivot_columns:
            r = self._rows[p]
            rows.append([r.get(k, f.zero) for k in range(self.unknowns)])
        return Matrix.from_rows(f, rows, self.unknowns)
