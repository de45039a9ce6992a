"""Tests for structure-constant algebras and their morphisms."""

import pytest

from conftest import GF7
from reflexa.linalg import GF, QQ, DimensionError, Matrix
from reflexa.algebras import (
    AlgebraMorphism,
    FinAlgebra,
    StructureError,
    TestAlgebra,
    base_algebra,
    nilradical,
    polynomial_morphism,
    product_algebra,
    square_zero_algebra,
    tensor_algebra,
    tensor_morphism,
    truncated_polynomial,
)


def _matrix_algebra_2x2():
    """M_2(K) with basis E11, E12, E21, E22 (non-commutative)."""
    f = QQ

    def product(a, b):
        i, j = divmod(a, 2)
        k, l = divmod(b, 2)
        return f.unit_vector(4, i * 2 + l) if j == k else f.zero_vector(4)

    return FinAlgebra.from_products(f, 4, product, (1, 0, 0, 1), "M2")


# ---------------------------------------------------------------------------
# Construction and validation
# ---------------------------------------------------------------------------

class TestFinAlgebra:
    def test_truncated_polynomial_products(self, field):
        a = truncated_polynomial(field, 3)
        x = (0, 1, 0)
        assert a.product(x, x) == (0, 0, 1)
        assert a.power(x, 3) == (0, 0, 0)
        assert a.label == "K[x]/x^3"

    def test_unit_checked(self):
        a = truncated_polynomial(QQ, 2)
        with pytest.raises(StructureError, match="unit is not a left identity"):
            FinAlgebra(QQ, 2, a.mult, (0, 1))

    def test_associativity_checked(self):
        # e1 e1 = e2 and e2 e1 = e1, so (e1 e1) e1 = e1 but e1 (e1 e1) = 0
        def product(i, j):
            if i == 0:
                return QQ.unit_vector(3, j)
            if j == 0:
                return QQ.unit_vector(3, i)
            return {(1, 1): QQ.unit_vector(3, 2), (2, 1): QQ.unit_vector(3, 1)}.get((i, j), QQ.zero_vector(3))

        with pytest.raises(StructureError, match="associativity fails"):
            FinAlgebra.from_products(QQ, 3, product, (1, 0, 0))

    def test_multiplication_shape(self):
        with pytest.raises(DimensionError, match="must be 2x4"):
            FinAlgebra(QQ, 2, Matrix.zero(QQ, 2, 2), (1, 0))

    def test_test_algebras_are_commutative(self):
        m2 = _matrix_algebra_2x2()
        assert not m2.is_commutative()
        with pytest.raises(StructureError, match="e0 e1 != e1 e0"):
            TestAlgebra.of(m2)

    def test_matrix_algebra_is_an_algebra(self):
        m2 = _matrix_algebra_2x2()
        e12, e21 = (0, 1, 0, 0), (0, 0, 1, 0)
        assert m2.product(e12, e21) == (1, 0, 0, 0)
        assert m2.product(e21, e12) == (0, 0, 0, 1)

    def test_equality_ignores_label(self):
        a = truncated_polynomial(QQ, 2)
        assert a.relabel("other") == a
        assert a != truncated_polynomial(GF7, 2)

    def test_left_multiplication(self):
        a = truncated_polynomial(QQ, 3)
        lx = a.left_multiplication((0, 1, 0))
        assert lx.apply((1, 0, 0)) == (0, 1, 0)
        assert lx.apply((0, 0, 1)) == (0, 0, 0)

    @pytest.mark.parametrize("build", [
        lambda f: base_algebra(f),
        lambda f: truncated_polynomial(f, 4),
        lambda f: square_zero_algebra(f),
        lambda f: product_algebra(f, 3),
    ])
    def test_standard_algebras_commutative(self, field, build):
        a = build(field)
        assert a.is_commutative()
        assert isinstance(a, TestAlgebra)

    def test_bad_sizes(self):
        with pytest.raises(StructureError, match="n >= 1"):
            truncated_polynomial(QQ, 0)
        with pytest.raises(StructureError, match="k >= 1"):
            product_algebra(QQ, 0)


class TestTensorAlgebra:
    def test_dimension_and_unit(self, field):
        t = tensor_algebra(truncated_polynomial(field, 2), truncated_polynomial(field, 2))
        assert t.dim == 4
        assert t.unit == (1, 0, 0, 0)
        assert isinstance(t, TestAlgebra)

    def test_product_factorwise(self):
        a = truncated_polynomial(QQ, 2)
        t = tensor_algebra(a, a)
        x1, one_x = (0, 0, 1, 0), (0, 1, 0, 0)
        assert t.product(x1, one_x) == (0, 0, 0, 1)
        assert t.product(x1, x1) == (0, 0, 0, 0)

    def test_non_commutative_factor_gives_plain_algebra(self):
        t = tensor_algebra(_matrix_algebra_2x2(), base_algebra(QQ))
        assert not isinstance(t, TestAlgebra)


# ---------------------------------------------------------------------------
# Morphisms
# ---------------------------------------------------------------------------

class TestAlgebraMorphism:
    def test_identity_and_structural(self, field):
        a = truncated_polynomial(field, 3)
        assert AlgebraMorphism.identity(a).matrix.is_identity()
        s = AlgebraMorphism.structural(base_algebra(field), a)
        assert s((1,)) == a.unit

    def test_truncation(self):
        a3, a2 = truncated_polynomial(QQ, 3), truncated_polynomial(QQ, 2)
        t = polynomial_morphism(a3, a2, (0, 1))
        assert t.matrix == Matrix.from_rows(QQ, [[1, 0, 0], [0, 1, 0]])

    def test_not_multiplicative(self):
        a2 = truncated_polynomial(QQ, 2)
        with pytest.raises(StructureError, match="phi"):
            AlgebraMorphism(a2, a2, Matrix.from_rows(QQ, [[1, 1], [0, 2]]))

    def test_x_must_be_nilpotent_enough(self):
        a2 = truncated_polynomial(QQ, 2)
        with pytest.raises(StructureError):
            polynomial_morphism(a2, product_algebra(QQ, 2), (1, 0))

    def test_unit_not_preserved(self):
        k = base_algebra(QQ)
        with pytest.raises(StructureError, match="unit not preserved"):
            AlgebraMorphism(k, truncated_polynomial(QQ, 2), Matrix.from_rows(QQ, [[0], [1]]))

    def test_compose(self):
        a3, a2, k = truncated_polynomial(QQ, 3), truncated_polynomial(QQ, 2), base_algebra(QQ)
        f = polynomial_morphism(a3, a2, (0, 1))
        g = polynomial_morphism(a2, k, (0,))
        assert g.compose(f).matrix == Matrix.from_rows(QQ, [[1, 0, 0]])

    def test_tensor_morphism(self):
        a2, k = truncated_polynomial(GF7, 2), base_algebra(GF7)
        eps = polynomial_morphism(a2, k, (0,))
        t = tensor_morphism(eps, eps)
        assert t.matrix == Matrix.from_rows(GF7, [[1, 0, 0, 0]])


# ---------------------------------------------------------------------------
# Nilradical
# ---------------------------------------------------------------------------

class TestNilradical:
    def test_truncated_polynomial(self, field):
        assert nilradical(truncated_polynomial(field, 3)) == [(0, 1, 0), (0, 0, 1)]

    def test_reduced_algebras(self, field):
        assert nilradical(product_algebra(field, 3)) == []
        assert nilradical(base_algebra(field)) == []

    def test_square_zero(self):
        assert len(nilradical(square_zero_algebra(GF(2)))) == 2

    def test_small_characteristic(self):
        # over GF(2) the Frobenius exponent must reach the dimension
        assert len(nilradical(truncated_polynomial(GF(2), 4))) == 3

    def test_non_commutative_rejected(self):
        with pytest.raises(StructureError, match="commutative"):
            nilradical(_matrix_algebra_2x2())
