"""Coalgebras with sparse comultiplication."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from reflexa.algebras import StructureError
from reflexa.errors import ReflexaError
from reflexa.linalg import DimensionError, Field, Matrix, Vector, check_same_field, kron

Term = tuple[int, int, Any]
"""``(j, k, c)``: the summand c e_j (x) e_k of a coproduct."""


class BialgebraError(ReflexaError):
    """Comultiplication and counit are not algebra morphisms."""


class MorphismError(BialgebraError):
    """A map is not a bialgebra morphism."""


def swap_matrix(field: Field, n: int) -> Matrix:
    """e_j (x) e_k |-> e_k (x) e_j on K^n (x) K^n."""
    cols = [field.unit_vector(n * n, k * n + j) for j in range(n) for k in range(n)]
    return Matrix.from_columns(field, cols, n * n)


@dataclass(frozen=True, eq=False)
class FinCoalgebra:
    """Coassociative counital coalgebra; ``comult[i]`` lists the terms of the coproduct of e_i."""

    field: Field
    dim: int
    comult: tuple[tuple[Term, ...], ...]
    counit: Vector
    label: str = ""

    def __post_init__(self) -> None:
        n, f = self.dim, self.field
        if len(self.comult) != n:
            raise DimensionError(f"comultiplication has {len(self.comult)} entries, expected {n}")
        if len(self.counit) != n:
            raise DimensionError(f"counit has length {len(self.counit)}, expected {n}")
        terms = []
        for i, row in enumerate(self.comult):
            clean = []
            for j, k, c in row:
                if not (0 <= j < n and 0 <= k < n):
                    raise DimensionError(f"coproduct of e{i} refers to a basis index outside 0..{n - 1}")
                c = f.coerce(c)
                if c:
                    clean.append((j, k, c))
            terms.append(tuple(clean))
        object.__setattr__(self, "comult", tuple(terms))
        object.__setattr__(self, "counit", f.vector(self.counit))
        self._check_axioms()

    def _check_axioms(self) -> None:
        n, f = self.dim, self.field
        d = self.comult_matrix
        eye = Matrix.identity(f, n)
        left = kron(d, eye) @ d
        right = kron(eye, d) @ d
        if left != right:
            i = next(i for i in range(n) if left.column(i) != right.column(i))
            raise StructureError(f"{self.name}: coassociativity fails on e{i}")
        e = self.counit_matrix
        if kron(e, eye) @ d != eye:
            raise StructureError(f"{self.name}: (counit (x) id) o comult is not the identity")
        if kron(eye, e) @ d != eye:
            raise StructureError(f"{self.name}: (id (x) counit) o comult is not the identity")

    @property
    def name(self) -> str:
        return self.label or f"coalgebra of dim {self.dim}"

    @classmethod
    def from_matrix(cls, field: Field, comult: Matrix, counit: Sequence[Any], label: str = "") -> FinCoalgebra:
        """From the ``n^2 x n`` comultiplication matrix."""
        check_same_field(field, comult.field)
        n = comult.cols
        if comult.rows != n * n:
            raise DimensionError(f"comultiplication must be {n * n}x{n}, got {comult.shape}")
        terms = [
            tuple((r // n, r % n, c) for r, c in enumerate(comult.column(i)) if c)
            for i in range(n)
        ]
        return cls(field, n, tuple(terms), tuple(counit), label)

    @property
    def comult_matrix(self) -> Matrix:
        n, f = self.dim, self.field
        cols = []
        for row in self.comult:
            col = [f.zero] * (n * n)
            for j, k, c in row:
                col[j * n + k] = f.add(col[j * n + k], c)
            cols.append(col)
        return Matrix.from_columns(f, cols, n * n)

    @property
    def counit_matrix(self) -> Matrix:
        return Matrix.row_vector(self.field, self.counit)

    def coproduct(self, x: Sequence[Any]) -> Vector:
        return self.comult_matrix.apply(x)

    def is_cocommutative(self) -> bool:
        d = self.comult_matrix
        return swap_matrix(self.field, self.dim) @ d == d

    def relabel(self, label: str) -> FinCoalgebra:
        return FinCoalgebra(self.field, self.dim, self.comult, self.counit, label)

    def same_structure(self, other: FinCoalgebra) -> bool:
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.comult_matrix == other.comult_matrix
            and self.counit == other.counit
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinCoalgebra):
            return NotImplemented
        return self.same_structure(other)

    def __hash__(self) -> int:
        return hash((self.field, self.dim, self.comult_matrix, self.counit))

    def __repr__(self) -> str:
        return f"<FinCoalgebra {self.name} over {self.field}>"
