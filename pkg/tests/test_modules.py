"""Tests for finite-rank modules, duals, tensors and Hom."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import GF7, matrices
from reflexa.linalg import QQ, DimensionError, FieldMismatchError, Matrix, kron
from reflexa.modules import (
    FinModule,
    LinearMap,
    coevaluation,
    double_dual_unit,
    dual_map,
    dual_module,
    evaluation,
    hom_element_to_map,
    hom_from_dual_source,
    hom_from_product,
    hom_module,
    hom_to_tensor,
    map_to_hom_element,
    snake_identity,
    tensor,
    tensor_map,
    tensor_to_hom,
)


@st.composite
def linear_maps(draw, max_rank: int = 8):
    f = draw(st.sampled_from([QQ, GF7]))
    m, n = draw(st.integers(0, max_rank)), draw(st.integers(0, max_rank))
    return LinearMap(FinModule(f, m), FinModule(f, n), draw(matrices(f, rows=n, cols=m)))


# ---------------------------------------------------------------------------
# Modules and maps
# ---------------------------------------------------------------------------

class TestFinModule:
    def test_negative_rank(self):
        with pytest.raises(DimensionError, match="rank must be >= 0"):
            FinModule(QQ, -1)

    def test_label_ignored_by_equality(self):
        assert FinModule(QQ, 2, "M") == FinModule(QQ, 2, "N")
        assert FinModule(QQ, 2) != FinModule(GF7, 2)

    def test_vector_length(self):
        with pytest.raises(DimensionError, match="rank 2"):
            FinModule(QQ, 2).vector([1, 2, 3])

    def test_basis(self, field):
        assert FinModule(field, 2).basis() == [(1, 0), (0, 1)]


class TestLinearMap:
    def test_shape_must_fit(self):
        with pytest.raises(DimensionError, match="does not fit"):
            LinearMap(FinModule(QQ, 2), FinModule(QQ, 3), Matrix.zero(QQ, 2, 3))

    def test_mixed_fields(self):
        with pytest.raises(FieldMismatchError):
            LinearMap(FinModule(QQ, 1), FinModule(GF7, 1), Matrix.identity(QQ, 1))

    def test_compose(self, field):
        m = FinModule(field, 2)
        swap = LinearMap(m, m, Matrix.from_rows(field, [[0, 1], [1, 0]]))
        assert (swap @ swap).matrix.is_identity()
        assert swap.is_isomorphism()

    def test_kernel_and_image(self):
        f = LinearMap(FinModule(QQ, 2), FinModule(QQ, 1), Matrix.from_rows(QQ, [[1, 1]]))
        assert f.kernel() == [(-1, 1)]
        assert f.is_surjective() and not f.is_injective()


# ---------------------------------------------------------------------------
# Double dual
# ---------------------------------------------------------------------------

class TestDoubleDual:
    def test_dual_keeps_rank(self):
        assert dual_module(FinModule(QQ, 3, "M")).rank == 3
        assert dual_module(FinModule(QQ, 3, "M")).label == "dual(M)"

    def test_dual_map_is_transpose(self):
        f = LinearMap(FinModule(QQ, 2), FinModule(QQ, 1), Matrix.from_rows(QQ, [[1, 2]]))
        assert dual_map(f).matrix == f.matrix.transpose()
        assert dual_map(f).domain.rank == 1

    @pytest.mark.parametrize("r", range(9))
    def test_unit_is_identity(self, field, r):
        eta = double_dual_unit(FinModule(field, r))
        assert eta.matrix.is_identity()
        assert eta.is_isomorphism()

    @given(linear_maps())
    @settings(max_examples=200, deadline=None)
    def test_naturality(self, g):
        lhs = dual_map(dual_map(g)).matrix @ double_dual_unit(g.domain).matrix
        rhs = double_dual_unit(g.codomain).matrix @ g.matrix
        assert lhs == rhs

    @given(linear_maps(4), linear_maps(4))
    @settings(max_examples=50, deadline=None)
    def test_dual_is_contravariant(self, f, g):
        if f.field != g.field or g.domain.rank != f.codomain.rank:
            return
        assert dual_map(g @ f).matrix == (dual_map(f) @ dual_map(g)).matrix


# ---------------------------------------------------------------------------
# Tensor, evaluation and Hom
# ---------------------------------------------------------------------------

class TestTensor:
    def test_rank_multiplies(self):
        assert tensor(FinModule(QQ, 2), FinModule(QQ, 3)).rank == 6

    def test_tensor_map_is_kron(self, field):
        a = LinearMap(FinModule(field, 1), FinModule(field, 2), Matrix.from_rows(field, [[1], [2]]))
        b = LinearMap(FinModule(field, 2), FinModule(field, 1), Matrix.from_rows(field, [[3, 4]]))
        assert tensor_map(a, b).matrix == kron(a.matrix, b.matrix)

    def test_mixed_fields(self):
        with pytest.raises(FieldMismatchError):
            tensor(FinModule(QQ, 1), FinModule(GF7, 1))


class TestEvaluation:
    def test_evaluation_pairs_dual_basis(self):
        ev = evaluation(FinModule(QQ, 2)).matrix
        # w_i (x) e_j sits at i * 2 + j
        assert ev.row(0) == (1, 0, 0, 1)

    def test_coevaluation_is_transpose(self):
        m = FinModule(GF7, 3)
        assert coevaluation(m).matrix == evaluation(m).matrix.transpose()

    @pytest.mark.parametrize("r", range(6))
    def test_snake(self, field, r):
        assert snake_identity(FinModule(field, r))


class TestHom:
    def test_hom_coordinates(self):
        m, n = FinModule(QQ, 2), FinModule(QQ, 3)
        g = LinearMap(m, n, Matrix.from_rows(QQ, [[1, 2], [3, 4], [5, 6]]))
        x = map_to_hom_element(g)
        # coordinate i * 3 + j is the j-th component of g(e_i)
        assert x == (1, 3, 5, 2, 4, 6)
        assert hom_element_to_map(m, n, x) == g

    def test_hom_element_length(self):
        with pytest.raises(DimensionError, match="needs 6 coordinates"):
            hom_element_to_map(FinModule(QQ, 2), FinModule(QQ, 3), [1])

    @pytest.mark.parametrize("r,s", [(1, 1), (2, 3), (4, 4), (0, 2)])
    def test_canonical_isomorphisms(self, field, r, s):
        m, n = FinModule(field, r), FinModule(field, s)
        assert hom_module(m, n).rank == r * s
        assert tensor_to_hom(m, n).is_isomorphism()
        assert hom_to_tensor(m, n).is_isomorphism()
        iso = hom_from_dual_source(m, n)
        assert iso.matrix.is_identity()
        assert iso.codomain == hom_module(dual_module(m), n)

    def test_tensor_to_hom_acts_as_rank_one_maps(self):
        m, n = FinModule(QQ, 2), FinModule(QQ, 2)
        # w_1 (x) e_0 |-> (u |-> u_1 e_0)
        x = tensor_to_hom(m, n).matrix.apply((0, 0, 1, 0))
        g = hom_element_to_map(m, n, x)
        assert g.matrix == Matrix.from_rows(QQ, [[0, 1], [0, 0]])

    @pytest.mark.parametrize("count", [1, 2, 3])
    def test_hom_from_product(self, count):
        n = FinModule(GF7, 2)
        iso = hom_from_product(count, n)
        assert iso.codomain.rank == count * 2
        assert iso.is_isomorphism()
