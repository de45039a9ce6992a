"""Standard small algebras and the nilradical."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Any

from reflexa.linalg import (
    Field,
    Matrix,
    PrimeField,
    Vector,
    check_same_field,
    kernel_basis,
    kron,
    kron_vector,
    span_basis,
)

from ._algebra import AlgebraMorphism, FinAlgebra, StructureError, TestAlgebra

logger = logging.getLogger(__name__)


def base_algebra(field: Field) -> TestAlgebra:
    """K as a one-dimensional algebra."""
    return TestAlgebra(field, 1, Matrix.identity(field, 1), (field.one,), "K")


def truncated_polynomial(field: Field, n: int, var: str = "x") -> TestAlgebra:
    """K[x]/(x^n) with basis 1, x, ..., x^(n-1)."""
    if n < 1:
        raise StructureError(f"K[{var}]/({var}^n) needs n >= 1, got {n}")

    def product(i: int, j: int) -> Vector:
        return field.unit_vector(n, i + j) if i + j < n else field.zero_vector(n)

    label = "K" if n == 1 else f"K[{var}]/{var}^{n}"
    return TestAlgebra.from_products(field, n, product, field.unit_vector(n, 0), label)


def square_zero_algebra(field: Field, generators: int = 2) -> TestAlgebra:
    """K[x_1..x_g]/(x_1..x_g)^2 with basis 1, x_1, ..., x_g."""
    n = generators + 1

    def product(i: int, j: int) -> Vector:
        if i == 0:
            return field.unit_vector(n, j)
        if j == 0:
            return field.unit_vector(n, i)
        return field.zero_vector(n)

    label = "K[x,y]/(x,y)^2" if generators == 2 else f"K[x1..x{generators}]/m^2"
    return TestAlgebra.from_products(field, n, product, field.unit_vector(n, 0), label)


def product_algebra(field: Field, k: int) -> TestAlgebra:
    """K^k with componentwise product (basis of orthogonal idempotents)."""
    if k < 1:
        raise StructureError(f"K^k needs k >= 1, got {k}")

    def product(i: int, j: int) -> Vector:
        return field.unit_vector(k, i) if i == j else field.zero_vector(k)

    label = "K" if k == 1 else ("KxK" if k == 2 else f"K^{k}")
    return TestAlgebra.from_products(field, k, product, (field.one,) * k, label)


def tensor_algebra(a: FinAlgebra, b: FinAlgebra) -> FinAlgebra:
    """A (x) B with (a (x) b)(a' (x) b') = aa' (x) bb'.

    The result is a ``TestAlgebra`` when both factors are.
    """
    field = check_same_field(a.field, b.field)
    nb = b.dim

    def product(s: int, t: int) -> Vector:
        i, j = divmod(s, nb)
        k, l = divmod(t, nb)
        return kron_vector(field, a.basis_product(i, k), b.basis_product(j, l))

    cls = TestAlgebra if isinstance(a, TestAlgebra) and isinstance(b, TestAlgebra) else FinAlgebra
    label = f"{a.label}(x){b.label}" if a.label and b.label else ""
    return cls.from_products(field, a.dim * nb, product, kron_vector(field, a.unit, b.unit), label)


def tensor_morphism(f: AlgebraMorphism, g: AlgebraMorphism) -> AlgebraMorphism:
    return AlgebraMorphism(
        tensor_algebra(f.source, g.source),
        tensor_algebra(f.target, g.target),
        kron(f.matrix, g.matrix),
    )


def polynomial_morphism(source: FinAlgebra, target: FinAlgebra, image_of_x: Sequence[Any]) -> AlgebraMorphism:
    """Morphism from K[x]/(x^n) sending x to ``image_of_x``.

    Fails with ``StructureError`` unless ``image_of_x`` has n-th power zero.
    """
    x = target.field.vector(image_of_x)
    columns = [target.power(x, k) for k in range(source.dim)]
    return AlgebraMorphism.from_columns(source, target, columns)


def nilradical(a: FinAlgebra) -> list[Vector]:
    """Basis of the nilradical of a commutative algebra.

    Over Q this is the radical of the trace form (x, y) |-> tr(L_xy).  Over
    GF(p) it is the kernel of x |-> x^(p^k) for p^k >= dim, which is
    linear because the algebra is commutative of characteristic p.
    """
    if not a.is_commutative():
        raise StructureError(f"{a.name}: nilradical is only computed for commutative algebras")
    n, f = a.dim, a.field
    if isinstance(f, PrimeField):
        q = f.characteristic
        while q < n:
            q *= f.characteristic
        frob = Matrix.from_columns(f, [a.power(e, q) for e in (f.unit_vector(n, i) for i in range(n))], n)
        basis = kernel_basis(frob)
    else:
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                lm = a.left_multiplication(a.basis_product(i, j))
                row.append(f.reduce(sum(lm[k, k] for k in range(n))))
            rows.append(row)
        basis = kernel_basis(Matrix.from_rows(f, rows, n))
    logger.debug("%s: nilradical of dim %d", a.name, len(basis))
    return span_basis(f, n, basis)
