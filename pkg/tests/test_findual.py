"""Tests for linearly recursive functionals on K[x]."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIELDS, GF7, elements
from reflexa.linalg import GF, QQ, FieldMismatchError
from reflexa.findual import (
    MODELS,
    ModelMismatchError,
    RecurrenceError,
    RecursiveFunctional,
    binomial_rows,
    extend_sequence,
    find_recurrence,
)


@st.composite
def functionals(draw, field=None, model=None, max_degree: int = 2):
    f = draw(st.sampled_from(FIELDS)) if field is None else field
    m = draw(st.sampled_from(MODELS)) if model is None else model
    d = draw(st.integers(1, max_degree))
    ann = tuple(draw(elements(f, 3)) for _ in range(d)) + (1,)
    values = tuple(draw(elements(f, 3)) for _ in range(d))
    return RecursiveFunctional(f, m, ann, values)


@st.composite
def triples(draw, max_degree: int = 2):
    f = draw(st.sampled_from(FIELDS))
    m = draw(st.sampled_from(MODELS))
    return tuple(draw(functionals(f, m, max_degree)) for _ in range(3))


# ---------------------------------------------------------------------------
# Sequences and recurrences
# ---------------------------------------------------------------------------

class TestRecurrences:
    def test_extend(self):
        assert extend_sequence(QQ, (-1, -1, 1), (0, 1), 8) == (0, 1, 1, 2, 3, 5, 8, 13)

    def test_find(self):
        assert find_recurrence(QQ, (1, 2, 4), 2) == (-2, 1)
        assert find_recurrence(QQ, (0, 1, 1, 2, 3, 5, 8), 3) == (-1, -1, 1)

    def test_all_zero(self):
        assert find_recurrence(GF7, (0, 0, 0), 2) == (0, 1)

    def test_degree_bound(self):
        assert find_recurrence(QQ, (1, 2, 4, 8, 17), 2) is None

    def test_needs_enough_terms(self):
        # degree 2 needs four terms
        assert find_recurrence(QQ, (0, 1, 1), 2) is None

    def test_binomial_rows(self):
        assert binomial_rows(QQ, 4)[3] == (1, 3, 3, 1)
        assert binomial_rows(GF(2), 4) == [(1,), (1, 1), (1, 0, 1), (1, 1, 1, 1)]


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

class TestRecursiveFunctional:
    def test_named_functionals(self, field):
        assert RecursiveFunctional.geometric(field, 2).terms(5) == field.vector((1, 2, 4, 8, 16))
        assert RecursiveFunctional.ones(field).terms(3) == (1, 1, 1)
        assert RecursiveFunctional.delta(field).terms(3) == (1, 0, 0)
        assert RecursiveFunctional.zero(field).is_zero()

    def test_fibonacci(self):
        fib = RecursiveFunctional.fibonacci(QQ)
        assert fib.terms(7) == (0, 1, 1, 2, 3, 5, 8)
        assert fib.evaluate(10) == 55
        assert fib.value(10) == 55

    def test_rational_ratio(self):
        half = RecursiveFunctional.geometric(QQ, "1/2")
        assert half.value(3) == Fraction(1, 8)

    def test_unknown_model(self):
        with pytest.raises(ModelMismatchError, match="unknown model"):
            RecursiveFunctional(QQ, "divided-power", (0, 1), (1,))

    @pytest.mark.parametrize("ann,values,message", [
        ((1,), (), "degree >= 1"),
        ((1, 2), (1,), "monic"),
        ((1, 0, 1), (1,), "needs 2 values"),
    ])
    def test_invalid(self, ann, values, message):
        with pytest.raises(RecurrenceError, match=message):
            RecursiveFunctional(QQ, "grouplike", ann, values)

    def test_from_prefix(self):
        fib = RecursiveFunctional.from_prefix(QQ, (0, 1, 1, 2, 3, 5, 8, 13), 3)
        assert fib == RecursiveFunctional.fibonacci(QQ)

    def test_from_prefix_without_fit(self):
        assert RecursiveFunctional.from_prefix(QQ, (1, 2, 4, 8, 17, 1), 2) is None

    def test_minimize(self, field):
        # (x - 1)(x - 2) kills the constant sequence 1, 1, 1, ...
        padded = RecursiveFunctional(field, "grouplike", (2, -3, 1), (1, 1))
        assert padded.minimize() == RecursiveFunctional.ones(field)

    def test_minimize_zero(self):
        z = RecursiveFunctional(QQ, "primitive", (5, 0, 1), (0, 0))
        assert z.minimize() == RecursiveFunctional.zero(QQ, "primitive")


# ---------------------------------------------------------------------------
# Arithmetic
# ---------------------------------------------------------------------------

class TestArithmetic:
    def test_grouplike_product_of_geometrics(self, field):
        g = lambda r: RecursiveFunctional.geometric(field, r)
        assert g(2) * g(3) == g(6)

    def test_primitive_product_of_geometrics(self, field):
        # binomial convolution adds the ratios
        g = lambda r: RecursiveFunctional.geometric(field, r, "primitive")
        assert g(2) * g(3) == g(5)

    def test_fibonacci_square(self):
        fib = RecursiveFunctional.fibonacci(QQ)
        sq = fib * fib
        assert sq.degree == 3
        assert sq.terms(8) == tuple(x * x for x in fib.terms(8))

    def test_fibonacci_square_annihilator(self, field):
        sq = RecursiveFunctional.fibonacci(field) * RecursiveFunctional.fibonacci(field)
        # F_{n+3}^2 = 2 F_{n+2}^2 + 2 F_{n+1}^2 - F_n^2
        assert sq.annihilator == field.vector((1, -2, -2, 1))

    def test_binomial_sum_of_ones(self):
        ones = RecursiveFunctional.ones(QQ, "primitive")
        assert (ones * ones).terms(5) == (1, 2, 4, 8, 16)

    @pytest.mark.parametrize("model", MODELS)
    def test_unit(self, field, model):
        fib = RecursiveFunctional.fibonacci(field, model)
        unit = RecursiveFunctional.unit(field, model)
        assert (fib * unit).same_functional(fib)
        assert (unit * fib).same_functional(fib)

    def test_sum_and_negation(self):
        fib = RecursiveFunctional.fibonacci(QQ)
        assert (fib + -fib).is_zero()
        assert (fib + fib).same_functional(fib.scale(2))

    def test_scale_by_zero(self):
        assert RecursiveFunctional.fibonacci(GF7).scale(7).is_zero()

    def test_model_mismatch(self):
        a = RecursiveFunctional.ones(QQ, "grouplike")
        b = RecursiveFunctional.ones(QQ, "primitive")
        with pytest.raises(ModelMismatchError, match="cannot combine"):
            a + b

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatchError):
            RecursiveFunctional.ones(QQ) * RecursiveFunctional.ones(GF7)


class TestLaws:
    @given(triples())
    @settings(max_examples=100, deadline=None)
    def test_product_degree_bound(self, abc):
        a, b, _ = abc
        assert (a * b).degree <= a.degree * b.degree

    @given(triples())
    @settings(max_examples=30, deadline=None)
    def test_commutative_and_associative(self, abc):
        a, b, c = abc
        assert (a * b).same_functional(b * a)
        assert ((a * b) * c).same_functional(a * (b * c))

    @given(triples())
    @settings(max_examples=30, deadline=None)
    def test_distributive(self, abc):
        a, b, c = abc
        assert ((a + b) * c).same_functional(a * c + b * c)

    @given(functionals())
    @settings(max_examples=50, deadline=None)
    def test_minimize_preserves_values(self, a):
        m = a.minimize()
        assert m.degree <= a.degree
        assert m.same_functional(a)
