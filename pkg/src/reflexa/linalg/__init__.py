"""Exact linear algebra over Q and GF(p).

Everything else in reflexa is built on this package::

    from reflexa.linalg import QQ, GF, Matrix, rref, kernel_basis, solve
"""

from ._field import (
    DimensionError,
    Field,
    FieldMismatchError,
    FieldScalar,
    GF,
    LinalgError,
    NotInvertibleError,
    PrimeField,
    QQ,
    RationalField,
    check_same_field,
    parse_field,
    parse_scalar,
)
from ._matrix import (
    Matrix,
    Vector,
    block_diag,
    hstack,
    kron,
    kron_vector,
    linear_combination,
    vector_add,
    vector_scale,
    vstack,
)
from ._elimination import (
    determinant,
    image_basis,
    in_span,
    intersect_subspaces,
    inverse,
    kernel_basis,
    rank,
    rref,
    same_span,
    solve,
    span_basis,
)
from ._system import LinearSystem

__all__ = [
    # Fields and scalars
    "Field",
    "RationalField",
    "PrimeField",
    "QQ",
    "GF",
    "FieldScalar",
    "parse_field",
    "parse_scalar",
    "check_same_field",
    # Matrices
    "Matrix",
    "Vector",
    "kron",
    "kron_vector",
    "hstack",
    "vstack",
    "block_diag",
    "vector_add",
    "vector_scale",
    "linear_combination",
    # Elimination
    "rref",
    "rank",
    "kernel_basis",
    "image_basis",
    "solve",
    "inverse",
    "determinant",
    "span_basis",
    "in_span",
    "same_span",
    "intersect_subspaces",
    "LinearSystem",
    # Errors
    "LinalgError",
    "FieldMismatchError",
    "DimensionError",
    "NotInvertibleError",
]
