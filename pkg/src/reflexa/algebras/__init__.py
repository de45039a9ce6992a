"""Finite-dimensional algebras by structure constants."""

from ._algebra import AlgebraMorphism, FinAlgebra, StructureError, TestAlgebra
from ._constructors import (
    base_algebra,
    nilradical,
    polynomial_morphism,
    product_algebra,
    square_zero_algebra,
    tensor_algebra,
    tensor_morphism,
    truncated_polynomial,
)

__all__ = [
    "FinAlgebra",
    "TestAlgebra",
    "AlgebraMorphism",
    "StructureError",
    "base_algebra",
    "truncated_polynomial",
    "square_zero_algebra",
    "product_algebra",
    "tensor_algebra",
    "tensor_morphism",
    "polynomial_morphism",
    "nilradical",
]
