"""Tests for exact fields, matrices and elimination."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import GF7, from_sympy, matrices, q, to_sympy
from reflexa.linalg import (
    GF,
    QQ,
    DimensionError,
    FieldMismatchError,
    FieldScalar,
    LinalgError,
    LinearSystem,
    Matrix,
    NotInvertibleError,
    determinant,
    hstack,
    image_basis,
    in_span,
    intersect_subspaces,
    inverse,
    kernel_basis,
    kron,
    kron_vector,
    parse_field,
    parse_scalar,
    rank,
    rref,
    same_span,
    solve,
    span_basis,
    vstack,
)


# ---------------------------------------------------------------------------
# Fields and scalars
# ---------------------------------------------------------------------------

class TestParseField:
    def test_rationals(self):
        assert parse_field("Q") == QQ
        assert parse_field("QQ") == QQ

    def test_prime_field_spellings(self):
        assert parse_field("GF:7") == GF7
        assert parse_field("GF7") == GF7
        assert parse_field("GF(7)") == GF7

    def test_composite_modulus_rejected(self):
        with pytest.raises(LinalgError, match="prime modulus"):
            parse_field("GF:9")

    def test_unknown_field(self):
        with pytest.raises(LinalgError, match="unknown field"):
            parse_field("R")

    def test_spec_round_trip(self):
        for f in (QQ, GF(2), GF(101)):
            assert parse_field(f.spec) == f


class TestFieldScalar:
    def test_rational_arithmetic(self):
        a = FieldScalar(QQ, "1/2")
        assert a + a == 1
        assert a * 4 == 2
        assert (a - 1) == Fraction(-1, 2)
        assert a.inverse() == 2

    def test_modular_arithmetic(self):
        a = FieldScalar(GF7, 3)
        assert a * 5 == 1
        assert a.inverse() == 5
        assert -a == 4
        assert a ** 6 == 1

    def test_fraction_into_prime_field(self):
        assert FieldScalar(GF7, Fraction(1, 2)) == 4

    def test_mixed_fields_raise(self):
        with pytest.raises(FieldMismatchError):
            FieldScalar(QQ, 1) + FieldScalar(GF7, 1)

    def test_float_rejected(self):
        with pytest.raises(LinalgError, match="inexact"):
            FieldScalar(QQ, 0.5)

    def test_division_by_zero(self):
        with pytest.raises(NotInvertibleError):
            FieldScalar(GF7, 0).inverse()

    def test_format_and_parse(self):
        assert str(FieldScalar(GF7, 10)) == "3 mod 7"
        assert parse_scalar("3 mod 7") == FieldScalar(GF7, 3)
        assert parse_scalar("-2/6") == FieldScalar(QQ, Fraction(-1, 3))

    def test_modulus_mismatch_in_string(self):
        with pytest.raises(FieldMismatchError):
            GF7.coerce("3 mod 5")

    def test_modular_string_over_q(self):
        with pytest.raises(FieldMismatchError):
            QQ.coerce("3 mod 7")


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

class TestMatrix:
    def test_shape_and_entries(self):
        m = q([1, 2, 3], [4, 5, 6])
        assert m.shape == (2, 3)
        assert m[1, 2] == 6
        assert m.column(1) == (2, 5)
        assert m.transpose().shape == (3, 2)

    def test_wrong_entry_count(self):
        with pytest.raises(DimensionError, match="needs 4 entries"):
            Matrix(QQ, 2, 2, [1, 2, 3])

    def test_product_shape_mismatch(self):
        with pytest.raises(DimensionError, match="cannot multiply"):
            q([1, 2]) @ q([1, 2])

    def test_mixed_field_product(self):
        with pytest.raises(FieldMismatchError):
            Matrix.identity(QQ, 2) @ Matrix.identity(GF7, 2)

    def test_identity(self):
        assert Matrix.identity(GF7, 3).is_identity()
        assert not q([1, 0], [0, 2]).is_identity()

    def test_entries_reduced_mod_p(self):
        m = Matrix(GF7, 1, 2, [8, -1])
        assert m.entries == (1, 6)

    def test_stacking(self):
        a, b = q([1], [2]), q([3], [4])
        assert hstack(QQ, [a, b]) == q([1, 3], [2, 4])
        assert vstack(QQ, [a.transpose(), b.transpose()]) == q([1, 2], [3, 4])

    def test_empty_shapes(self):
        z = Matrix.zero(QQ, 0, 3)
        assert (Matrix.zero(QQ, 2, 0) @ z).shape == (2, 3)
        assert rank(z) == 0
        assert len(kernel_basis(z)) == 3

    def test_dict_round_trip(self):
        m = Matrix(GF7, 2, 2, [1, 2, 3, 4])
        assert Matrix.from_dict(GF7, m.to_dict()) == m
        assert m.to_dict()["entries"][0] == ["1 mod 7", "2 mod 7"]


class TestKron:
    def test_index_convention(self):
        # (A (x) B)[i*p + k, j*q + l] = A[i, j] B[k, l]
        a, b = q([1, 2], [3, 4]), q([0, 5], [6, 7])
        k = kron(a, b)
        assert k.shape == (4, 4)
        assert k[1 * 2 + 0, 0 * 2 + 1] == 3 * 5
        assert k[0, 3] == 2 * 5

    def test_vector_convention(self):
        assert kron_vector(QQ, (1, 2), (3, 4, 5)) == (3, 4, 5, 6, 8, 10)

    @given(st.data())
    @settings(max_examples=30, deadline=None)
    def test_mixed_product(self, data):
        f = data.draw(st.sampled_from([QQ, GF7]))
        p, r, s, u = (data.draw(st.integers(1, 3)) for _ in range(4))
        qq, t = data.draw(st.integers(1, 3)), data.draw(st.integers(1, 3))
        a = data.draw(matrices(f, rows=p, cols=qq))
        c = data.draw(matrices(f, rows=qq, cols=r))
        b = data.draw(matrices(f, rows=s, cols=t))
        d = data.draw(matrices(f, rows=t, cols=u))
        assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)

    @given(st.data())
    @settings(max_examples=20, deadline=None)
    def test_associative(self, data):
        f = data.draw(st.sampled_from([QQ, GF7]))
        a, b, c = (data.draw(matrices(f, 2, 2)) for _ in range(3))
        assert kron(kron(a, b), c) == kron(a, kron(b, c))


# ---------------------------------------------------------------------------
# Elimination
# ---------------------------------------------------------------------------

class TestRref:
    def test_known_rref(self):
        r, pivots = rref(q([2, 4, 6], [1, 3, 5]))
        assert pivots == [0, 1]
        assert r == q([1, 0, -1], [0, 1, 2])

    def test_modular_rref(self):
        r, pivots = rref(Matrix.from_rows(GF7, [[3, 6], [1, 2]]))
        assert pivots == [0]
        assert r.row(0) == (1, 2)
        assert r.row(1) == (0, 0)

    @given(st.data())
    @settings(max_examples=50, deadline=None)
    def test_idempotent(self, data):
        f = data.draw(st.sampled_from([QQ, GF7]))
        m = data.draw(matrices(f, 5, 5))
        r, pivots = rref(m)
        assert rref(r) == (r, pivots)

    @given(st.data())
    @settings(max_examples=50, deadline=None)
    def test_rank_nullity(self, data):
        f = data.draw(st.sampled_from([QQ, GF7]))
        m = data.draw(matrices(f, 5, 5))
        kernel = kernel_basis(m)
        assert rank(m) + len(kernel) == m.cols
        for v in kernel:
            assert not any(m.apply(v))

    @given(st.data())
    @settings(max_examples=40, deadline=None)
    def test_matches_sympy_over_q(self, data):
        m = data.draw(matrices(QQ, 4, 5))
        if m.rows == 0 or m.cols == 0:
            return
        expected, pivots = to_sympy(m).rref()
        r, ours = rref(m)
        assert ours == list(pivots)
        assert r == from_sympy(expected)


class TestSolveAndInverse:
    def test_solve(self):
        x = solve(q([1, 1], [1, -1]), [3, 1])
        assert x == (2, 1)

    def test_inconsistent(self):
        assert solve(q([1, 1], [2, 2]), [1, 3]) is None

    def test_free_variables_zero(self):
        assert solve(q([1, 1]), [2]) == (2, 0)

    def test_inverse(self, field):
        m = Matrix.from_rows(field, [[2, 1], [1, 1]])
        assert (m @ inverse(m)).is_identity()

    def test_singular(self):
        with pytest.raises(NotInvertibleError, match="singular"):
            inverse(q([1, 2], [2, 4]))

    def test_determinant(self):
        assert determinant(q([1, 2], [3, 4])) == -2
        assert determinant(Matrix.from_rows(GF7, [[1, 2], [3, 4]])) == 5
        assert determinant(q([0, 1], [1, 0])) == -1

    def test_image_basis_uses_pivot_columns(self):
        assert image_basis(q([1, 2, 0], [0, 0, 1])) == [(1, 0), (0, 1)]


class TestSubspaces:
    def test_span_basis_drops_dependents(self):
        basis = span_basis(QQ, 3, [(1, 1, 0), (2, 2, 0), (0, 0, 0)])
        assert basis == [(1, 1, 0)]

    def test_in_span(self):
        assert in_span(QQ, 2, [(1, 1)], (3, 3))
        assert not in_span(QQ, 2, [(1, 1)], (1, 0))
        assert in_span(QQ, 2, [], (0, 0))

    def test_intersection(self):
        a = [(1, 0, 0), (0, 1, 0)]
        b = [(0, 1, 0), (0, 0, 1)]
        assert intersect_subspaces(QQ, 3, [a, b]) == [(0, 1, 0)]

    def test_intersection_of_nothing_is_everything(self):
        assert len(intersect_subspaces(GF7, 2, [])) == 2

    def test_same_span(self):
        assert same_span(QQ, 2, [(1, 2)], [(2, 4)])


class TestLinearSystem:
    def test_kernel_independent_of_equation_order(self):
        eqs = [{0: 1, 1: -1}, {1: 1, 2: -1}]
        a = LinearSystem(QQ, 3)
        a.add_equations(eqs)
        b = LinearSystem(QQ, 3)
        b.add_equations(reversed(eqs))
        assert a.kernel_basis() == b.kernel_basis() == [(1, 1, 1)]

    def test_rank_grows_only_on_new_equations(self):
        s = LinearSystem(GF7, 2)
        assert s.add_equation([1, 1])
        assert not s.add_equation([2, 2])
        assert s.rank == 1

    def test_wrong_length(self):
        with pytest.raises(DimensionError, match="3 unknowns"):
            LinearSystem(QQ, 3).add_equation([1, 2])

    def test_unknown_out_of_range(self):
        with pytest.raises(DimensionError, match="out of range"):
            LinearSystem(QQ, 2).add_equation({5: 1})
