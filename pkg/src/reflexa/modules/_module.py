"""Finite-rank free modules and the linear maps between them."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field as dc_field
from typing import Any

from reflexa.linalg import (
    DimensionError,
    Field,
    Matrix,
    Vector,
    check_same_field,
    image_basis,
    kernel_basis,
    rank,
)


@dataclass(frozen=True)
class FinModule:
    """K^rank with its standard basis.

    Over a field every module is free, so a module is its rank; elements
    are coordinate vectors.  ``label`` is cosmetic and ignored by equality.
    """

    field: Field
    rank: int
    label: str = dc_field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise DimensionError(f"module rank must be >= 0, got {self.rank}")

    def zero(self) -> Vector:
        return self.field.zero_vector(self.rank)

    def basis(self) -> list[Vector]:
        return [self.field.unit_vector(self.rank, k) for k in range(self.rank)]

    def vector(self, values: Sequence[Any]) -> Vector:
        if len(values) != self.rank:
            raise DimensionError(f"vector of length {len(values)} in module of rank {self.rank}")
        return self.field.vector(values)

    def __str__(self) -> str:
        name = self.label or "M"
        return f"{name}[{self.field}^{self.rank}]"


@dataclass(frozen=True)
class LinearMap:
    """A K-linear map given by its matrix in the standard bases."""

    domain: FinModule
    codomain: FinModule
    matrix: Matrix

    def __post_init__(self) -> None:
        check_same_field(self.domain.field, self.codomain.field, self.matrix.field)
        expected = (self.codomain.rank, self.domain.rank)
        if self.matrix.shape != expected:
            raise DimensionError(
                f"matrix shape {self.matrix.shape} does not fit {self.domain} -> {self.codomain}"
            )

    @property
    def field(self) -> Field:
        return self.domain.field

    @classmethod
    def identity(cls, m: FinModule) -> LinearMap:
        return cls(m, m, Matrix.identity(m.field, m.rank))

    @classmethod
    def zero(cls, domain: FinModule, codomain: FinModule) -> LinearMap:
        return cls(domain, codomain, Matrix.zero(domain.field, codomain.rank, domain.rank))

    def __call__(self, v: Sequence[Any]) -> Vector:
        return self.matrix.apply(v)

    def compose(self, other: LinearMap) -> LinearMap:
        """``self o other``."""
        if other.codomain.rank != self.domain.rank:
            raise DimensionError(f"cannot compose {self.domain} <- {other.codomain}")
        return LinearMap(other.domain, self.codomain, self.matrix @ other.matrix)

    def __matmul__(self, other: LinearMap) -> LinearMap:
        return self.compose(other)

    def __add__(self, other: LinearMap) -> LinearMap:
        return LinearMap(self.domain, self.codomain, self.matrix + other.matrix)

    def rank(self) -> int:
        return rank(self.matrix)

    def is_injective(self) -> bool:
        return self.rank() == self.domain.rank

    def is_surjective(self) -> bool:
        return self.rank() == self.codomain.rank

    def is_isomorphism(self) -> bool:
        return self.domain.rank == self.codomain.rank and self.is_injective()

    def kernel(self) -> list[Vector]:
        return kernel_basis(self.matrix)

    def image(self) -> list[Vector]:
        return image_basis(self.matrix)
