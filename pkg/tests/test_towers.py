"""Tests for towers: stabilization, decomposition, duality, kernels and power series."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIELDS, matrices
from reflexa.algebras import product_algebra, truncated_polynomial
from reflexa.linalg import GF, QQ, Matrix
from reflexa.modules import FinModule
from reflexa.towers import (
    DirectSystem,
    InconsistentFunctionalError,
    NonSurjectiveError,
    NotAUnitError,
    Tower,
    TowerElement,
    TowerError,
    TowerFunctional,
    algebra_generators,
    algebra_morphisms,
    builtin_tower,
    completed_tensor,
    constant_tower,
    dual_tower,
    kernel_tower,
    power_series_tower,
    product_decomposition,
    product_tower,
    ps_element,
    ps_invert,
    ps_mul,
    reflexivity_roundtrip,
    stabilized_images,
    verify_tensor_universal_property,
)

GF3 = GF(3)


@st.composite
def towers(draw, max_depth: int = 4, max_dim: int = 3):
    f = draw(st.sampled_from(FIELDS))
    depth = draw(st.integers(1, max_depth))
    dims = draw(st.lists(st.integers(0, max_dim), min_size=depth + 1, max_size=depth + 1))
    maps = [draw(matrices(f, rows=dims[n], cols=dims[n + 1])) for n in range(depth)]
    return Tower.from_dims(f, dims, maps, "random")


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

class TestTower:
    def test_map_count(self):
        with pytest.raises(TowerError, match="3 levels need 2 maps"):
            Tower.from_dims(QQ, [1, 1, 1], [Matrix.identity(QQ, 1)])

    def test_map_shape(self):
        with pytest.raises(TowerError, match="map 0 has shape"):
            Tower.from_dims(QQ, [1, 2], [Matrix.identity(QQ, 2)])

    def test_needs_a_level(self):
        with pytest.raises(TowerError, match="at least one level"):
            Tower(QQ, [], [])

    def test_deepen_and_truncate(self, field):
        t = power_series_tower(field, 2)
        deeper = t.deepen(5)
        assert deeper.dims == [1, 2, 3, 4, 5, 6]
        assert deeper.truncate(2) == t

    def test_deepen_needs_generator(self):
        t = Tower.from_dims(QQ, [1, 1], [Matrix.identity(QQ, 1)])
        with pytest.raises(TowerError, match="cannot be deepened"):
            t.deepen(3)

    def test_composite(self):
        t = power_series_tower(QQ, 3)
        assert t.composite(3, 0) == Matrix.from_rows(QQ, [[1, 0, 0, 0]])
        with pytest.raises(TowerError, match="no map"):
            t.composite(0, 1)

    def test_builtins(self, field):
        assert power_series_tower(field, 3).is_surjective()
        assert product_tower(field, 3).dims == [1, 2, 3, 4]
        assert constant_tower(field, 2, rank=3).dims == [3, 3, 3]

    def test_builtin_names(self):
        assert builtin_tower("power-series:6", QQ).depth == 6
        assert builtin_tower("power-series:6", QQ, depth=2).depth == 2
        assert builtin_tower("product", QQ).depth == 4
        with pytest.raises(TowerError, match="unknown tower"):
            builtin_tower("laurent:3", QQ)


class TestElementsAndFunctionals:
    def test_incompatible_element(self):
        t = power_series_tower(QQ, 1)
        with pytest.raises(TowerError, match="not compatible"):
            TowerElement(t, [(1,), (2, 0)])

    def test_from_top(self):
        t = power_series_tower(QQ, 2)
        e = TowerElement.from_top(t, (1, 2, 3))
        assert e.level(0) == (1,)
        assert e.level(1) == (1, 2)

    def test_through_and_evaluate(self, field):
        t = power_series_tower(field, 3)
        coeff_x = TowerFunctional.through(t, 1, (0, 1))
        assert coeff_x.at(3) == (0, 1, 0, 0)
        assert coeff_x(ps_element(t, (5, 4, 3, 2))) == 4
        with pytest.raises(TowerError, match="does not factor"):
            coeff_x.at(0)

    def test_inconsistent_levels(self):
        t = power_series_tower(QQ, 1)
        with pytest.raises(InconsistentFunctionalError):
            TowerFunctional.from_levels(t, [(1,), (0, 1)])

    def test_zero_functional(self):
        t = power_series_tower(QQ, 2)
        assert TowerFunctional.through(t, 2, (0, 0, 0)).is_zero()


# ---------------------------------------------------------------------------
# Stabilization and product decomposition
# ---------------------------------------------------------------------------

class TestStabilizedImages:
    def test_shrinks_to_images(self):
        t = Tower.from_dims(QQ, [2, 1], [Matrix.from_rows(QQ, [[1], [0]])])
        s = stabilized_images(t)
        assert s.dims == [1, 1]
        assert s.is_surjective()
        assert s.prefix_stable is False

    def test_zero_map_kills_lower_levels(self):
        zero, one = Matrix.zero(QQ, 1, 1), Matrix.identity(QQ, 1)
        t = Tower.from_dims(QQ, [1, 1, 1], [zero, one])
        assert stabilized_images(t).dims == [0, 1, 1]

    def test_surjective_tower_unchanged(self, field):
        t = power_series_tower(field, 3)
        s = stabilized_images(t)
        assert s == t
        assert s.prefix_stable is True

    def test_deepen_first(self):
        s = stabilized_images(power_series_tower(QQ, 1), depth=4)
        assert s.depth == 4

    def test_stabilized_tower_deepens(self, field):
        s = stabilized_images(power_series_tower(field, 2))
        deeper = s.deepen(5)
        assert deeper.dims == [1, 2, 3, 4, 5, 6]
        assert deeper.is_surjective()
        assert deeper.deepen(7).depth == 7

    def test_stabilized_without_generator_stays_finite(self):
        t = Tower.from_dims(QQ, [2, 1], [Matrix.from_rows(QQ, [[1], [0]])])
        with pytest.raises(TowerError, match="no generator"):
            stabilized_images(t).deepen(3)

    @given(towers())
    @settings(max_examples=100, deadline=None)
    def test_result_is_surjective(self, t):
        s = stabilized_images(t)
        assert s.is_surjective()
        assert all(a <= b for a, b in zip(s.dims, t.dims))


class TestProductDecomposition:
    def test_power_series(self, field):
        d = product_decomposition(power_series_tower(field, 4))
        assert d.dims == [1, 1, 1, 1, 1]
        assert [m.rank for m in d.modules] == [1] * 5

    def test_product_tower(self, field):
        assert product_decomposition(product_tower(field, 3)).dims == [1, 1, 1, 1]

    def test_requires_surjective(self):
        t = Tower.from_dims(QQ, [2, 1], [Matrix.from_rows(QQ, [[1], [0]])])
        with pytest.raises(NonSurjectiveError, match="not surjective"):
            product_decomposition(t)

    @given(towers())
    @settings(max_examples=100, deadline=None)
    def test_cumulative_dims(self, t):
        s = stabilized_images(t)
        d = product_decomposition(s)
        assert list(itertools.accumulate(d.dims)) == s.dims
        for n, m in enumerate(s.maps):
            # the tower maps become truncations in the split coordinates
            iso, below = d.isomorphisms[n + 1], d.isomorphisms[n]
            assert (m @ iso).column_list()[: below.cols] == below.column_list()


# ---------------------------------------------------------------------------
# Duality and kernels
# ---------------------------------------------------------------------------

class TestDuality:
    def test_dual_tower(self, field):
        t = power_series_tower(field, 3)
        d = dual_tower(t)
        assert d.dims == t.dims
        assert d.dual() == t

    def test_dual_requires_surjective(self):
        t = Tower.from_dims(QQ, [2, 1], [Matrix.from_rows(QQ, [[1], [0]])])
        with pytest.raises(NonSurjectiveError):
            dual_tower(t)

    def test_direct_system_maps_injective(self):
        with pytest.raises(TowerError, match="not injective"):
            DirectSystem(QQ, [FinModule(QQ, 2), FinModule(QQ, 2)], [Matrix.zero(QQ, 2, 2)])

    def test_roundtrip_power_series(self, field):
        v = reflexivity_roundtrip(power_series_tower(field, 5))
        assert v.ok
        assert v.details["dims"] == [1, 2, 3, 4, 5, 6]

    @given(towers())
    @settings(max_examples=100, deadline=None)
    def test_roundtrip_random(self, t):
        assert reflexivity_roundtrip(t).ok


class TestKernelTower:
    def test_constant_term(self, field):
        t = power_series_tower(field, 4)
        f = TowerFunctional.through(t, 0, (field.one,))
        quotient, split = kernel_tower(f)
        assert quotient.dims == [0, 1, 2, 3, 4]
        assert split.element.level(4) == (1, 0, 0, 0, 0)
        assert all(len(kb) == n for n, kb in enumerate(split.kernel_bases))

    def test_functional_from_level_one(self):
        t = power_series_tower(QQ, 3)
        f = TowerFunctional.through(t, 1, (0, 1))
        quotient, split = kernel_tower(f)
        assert quotient.dims == [1, 1, 2, 3]
        assert split.kernel_bases[0] is None
        assert f(split.element) == 1

    def test_zero_functional(self):
        t = power_series_tower(QQ, 2)
        quotient, split = kernel_tower(TowerFunctional.through(t, 0, (0,)))
        assert quotient is t
        assert split is None

    def test_different_tower(self):
        t = power_series_tower(QQ, 2)
        f = TowerFunctional.through(t, 0, (1,))
        with pytest.raises(TowerError, match="different tower"):
            kernel_tower(f, constant_tower(QQ, 2))


# ---------------------------------------------------------------------------
# Power series
# ---------------------------------------------------------------------------

class TestPowerSeries:
    def test_mul(self):
        assert ps_mul(QQ, (1, 1), (1, -1)) == (1, 0)
        assert ps_mul(QQ, (1, 1), (1, 1), depth=3) == (1, 2, 1, 0)

    def test_geometric_inverse(self, field):
        assert ps_invert(field, (1, -1), 10) == (1,) * 11

    def test_not_a_unit(self):
        with pytest.raises(NotAUnitError, match="constant term is zero"):
            ps_invert(QQ, (0, 1), 3)

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=8), st.integers(0, 10))
    @settings(max_examples=100, deadline=None)
    def test_inverse_property(self, coeffs, depth):
        if coeffs[0] == 0:
            coeffs[0] = 1
        inv = ps_invert(QQ, coeffs, depth)
        assert ps_mul(QQ, coeffs, inv, depth) == (1,) + (0,) * depth

    def test_element_in_tower(self):
        t = power_series_tower(GF3, 2)
        e = ps_element(t, (1, 2, 3, 4))
        assert e.level(2) == (1, 2, 0)


# ---------------------------------------------------------------------------
# Completed tensor product
# ---------------------------------------------------------------------------

class TestCompletedTensor:
    def test_square_dims(self, field):
        a = power_series_tower(field, 4)
        t = completed_tensor(a, a)
        assert t.dims == [(n + 1) ** 2 for n in range(5)]
        assert t.is_surjective()

    def test_deepens(self):
        a = power_series_tower(QQ, 1)
        assert completed_tensor(a, a).deepen(3).dims == [1, 4, 9, 16]

    def test_generators(self, field):
        assert algebra_generators(truncated_polynomial(field, 3)) == [1]
        assert algebra_generators(product_algebra(field, 2)) == [0]

    def test_morphisms_need_finite_field(self):
        a = truncated_polynomial(QQ, 2)
        with pytest.raises(TowerError, match="finite fields"):
            algebra_morphisms(a, a)

    def test_morphism_counts(self):
        d2 = truncated_polynomial(GF3, 2)
        # x |-> c x for c in GF(3)
        assert len(algebra_morphisms(d2, d2)) == 3
        assert len(algebra_morphisms(product_algebra(GF3, 2), truncated_polynomial(GF3, 1))) == 2

    def test_universal_property(self):
        a = power_series_tower(GF3, 1)
        v = verify_tensor_universal_property(a, a, 1, truncated_polynomial(GF3, 2))
        assert v.ok, v.message
        assert v.details["hom_tensor"] == 9

    def test_universal_property_unknown_over_q(self):
        a = power_series_tower(QQ, 1)
        assert verify_tensor_universal_property(a, a, 1, truncated_polynomial(QQ, 2)).status == "unknown"
