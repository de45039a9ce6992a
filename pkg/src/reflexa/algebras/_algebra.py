"""Structure-constant algebras and algebra morphisms.

An algebra of dimension n stores its multiplication as an ``n x n^2``
matrix whose column ``i * n + j`` holds the coordinates of e_i e_j, and
its unit as a coordinate vector.  Every constructor validates the
axioms as exact matrix identities and raises ``StructureError`` naming
the first failing basis indices.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Any

from reflexa.errors import ReflexaError
from reflexa.linalg import (
    DimensionError,
    Field,
    Matrix,
    Vector,
    check_same_field,
    kron,
    kron_vector,
    linear_combination,
)
from reflexa.modules import FinModule, LinearMap


class StructureError(ReflexaError):
    """An algebra, coalgebra or morphism axiom does not hold."""


# ---------------------------------------------------------------------------
# FinAlgebra
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FinAlgebra:
    """Associative unital algebra of finite dimension."""

    field: Field
    dim: int
    mult: Matrix
    unit: Vector
    label: str = ""

    def __post_init__(self) -> None:
        check_same_field(self.field, self.mult.field)
        n = self.dim
        if self.mult.shape != (n, n * n):
            raise DimensionError(f"multiplication of a dim-{n} algebra must be {n}x{n * n}, got {self.mult.shape}")
        if len(self.unit) != n:
            raise DimensionError(f"unit has length {len(self.unit)}, expected {n}")
        object.__setattr__(self, "unit", self.field.vector(self.unit))
        self._check_axioms()

    def _check_axioms(self) -> None:
        n, f = self.dim, self.field
        products = self._sparse_products()

        def times(terms: list[tuple[int, Any]], k: int, on_left: bool) -> list[Any]:
            # (sum c_l e_l) e_k when on_left, else e_k (sum c_l e_l)
            out = [f.zero] * n
            for l, c in terms:
                for r, v in products[l * n + k] if on_left else products[k * n + l]:
                    out[r] = f.add(out[r], f.mul(c, v))
            return out

        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if times(products[i * n + j], k, True) != times(products[j * n + k], i, False):
                        raise StructureError(f"{self.name}: associativity fails at (e{i} e{j}) e{k}")
        if not self.left_multiplication(self.unit).is_identity():
            raise StructureError(f"{self.name}: unit is not a left identity")
        if not self.right_multiplication(self.unit).is_identity():
            raise StructureError(f"{self.name}: unit is not a right identity")

    def _sparse_products(self) -> list[list[tuple[int, Any]]]:
        """Nonzero coordinates of every e_i e_j, in column order."""
        return [[(r, v) for r, v in enumerate(col) if v] for col in self.mult.column_list()]

    @property
    def name(self) -> str:
        return self.label or f"algebra of dim {self.dim}"

    # -- Constructors --------------------------------------------------------

    @classmethod
    def from_products(
        cls,
        field: Field,
        dim: int,
        product: Callable[[int, int], Sequence[Any]],
        unit: Sequence[Any],
        label: str = "",
    ) -> FinAlgebra:
        """Build from a function giving the coordinates of ``e_i e_j``."""
        columns = [field.vector(product(i, j)) for i in range(dim) for j in range(dim)]
        mult = Matrix.from_columns(field, columns, dim)
        return cls(field, dim, mult, tuple(unit), label)

    # -- Arithmetic ----------------------------------------------------------

    @property
    def module(self) -> FinModule:
        return FinModule(self.field, self.dim, self.label)

    def basis_product(self, i: int, j: int) -> Vector:
        return self.mult.column(i * self.dim + j)

    def product(self, x: Sequence[Any], y: Sequence[Any]) -> Vector:
        return self.mult.apply(kron_vector(self.field, x, y))

    def power(self, x: Sequence[Any], k: int) -> Vector:
        result = self.unit
        base = tuple(x)
        while k > 0:
            if k & 1:
                result = self.product(result, base)
            base = self.product(base, base)
            k >>= 1
        return result

    def left_multiplication(self, x: Sequence[Any]) -> Matrix:
        """Matrix of y |-> x y."""
        n, f = self.dim, self.field
        cols = [linear_combination(f, x, [self.basis_product(i, j) for i in range(n)], n) for j in range(n)]
        return Matrix.from_columns(f, cols, n)

    def right_multiplication(self, x: Sequence[Any]) -> Matrix:
        n, f = self.dim, self.field
        cols = [linear_combination(f, x, [self.basis_product(j, i) for i in range(n)], n) for j in range(n)]
        return Matrix.from_columns(f, cols, n)

    def is_commutative(self) -> bool:
        n = self.dim
        return all(
            self.basis_product(i, j) == self.basis_product(j, i)
            for i in range(n) for j in range(i + 1, n)
        )

    def mult_map(self) -> LinearMap:
        m = self.module
        return LinearMap(FinModule(self.field, self.dim ** 2), m, self.mult)

    def unit_map(self) -> LinearMap:
        return LinearMap(FinModule(self.field, 1), self.module, Matrix.column_vector(self.field, self.unit))

    def relabel(self, label: str) -> FinAlgebra:
        return type(self)(self.field, self.dim, self.mult, self.unit, label)

    # -- Equality ------------------------------------------------------------

    def same_structure(self, other: FinAlgebra) -> bool:
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.mult == other.mult
            and self.unit == other.unit
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinAlgebra):
            return NotImplemented
        return self.same_structure(other)

    def __hash__(self) -> int:
        return hash((self.field, self.dim, self.mult, self.unit))

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} over {self.field}>"


@dataclass(frozen=True, eq=False, repr=False)
class TestAlgebra(FinAlgebra):
    """A commutative finite-dimensional algebra, used to evaluate functors."""

    __test__ = False

    def _check_axioms(self) -> None:
        super()._check_axioms()
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                if self.basis_product(i, j) != self.basis_product(j, i):
                    raise StructureError(f"{self.name}: e{i} e{j} != e{j} e{i}")

    @classmethod
    def of(cls, a: FinAlgebra) -> TestAlgebra:
        return cls(a.field, a.dim, a.mult, a.unit, a.label)


# ---------------------------------------------------------------------------
# AlgebraMorphism
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class AlgebraMorphism:
    """A unital multiplicative linear map between algebras."""

    source: FinAlgebra
    target: FinAlgebra
    matrix: Matrix

    def __post_init__(self) -> None:
        check_same_field(self.source.field, self.target.field, self.matrix.field)
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise DimensionError(
                f"morphism matrix {self.matrix.shape} does not fit "
                f"{self.source.name} -> {self.target.name}"
            )
        self._check()

    def _check(self) -> None:
        phi = self.matrix
        if phi.apply(self.source.unit) != self.target.unit:
            raise StructureError(f"{self.source.name} -> {self.target.name}: unit not preserved")
        lhs = phi @ self.source.mult
        rhs = self.target.mult @ kron(phi, phi)
        if lhs != rhs:
            n = self.source.dim
            for c in range(n * n):
                if lhs.column(c) != rhs.column(c):
                    raise StructureError(
                        f"{self.source.name} -> {self.target.name}: "
                        f"phi(e{c // n} e{c % n}) != phi(e{c // n}) phi(e{c % n})"
                    )

    @classmethod
    def identity(cls, a: FinAlgebra) -> AlgebraMorphism:
        return cls(a, a, Matrix.identity(a.field, a.dim))

    @classmethod
    def structural(cls, base: FinAlgebra, target: FinAlgebra) -> AlgebraMorphism:
        """The unique morphism from the one-dimensional base algebra."""
        return cls(base, target, Matrix.column_vector(target.field, target.unit))

    @classmethod
    def from_columns(cls, source: FinAlgebra, target: FinAlgebra, columns: Sequence[Sequence[Any]]) -> AlgebraMorphism:
        return cls(source, target, Matrix.from_columns(source.field, columns, target.dim))

    @property
    def linear_map(self) -> LinearMap:
        return LinearMap(self.source.module, self.target.module, self.matrix)

    def __call__(self, x: Sequence[Any]) -> Vector:
        return self.matrix.apply(x)

    def compose(self, other: AlgebraMorphism) -> AlgebraMorphism:
        """``self o other``."""
        return AlgebraMorphism(other.source, self.target, self.matrix @ other.matrix)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraMorphism):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.matrix))
