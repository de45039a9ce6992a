"""Tests for bialgebras, their duals, grouplikes and the group fixtures."""

import time

import pytest

from conftest import GF7
from reflexa.algebras import StructureError, product_algebra
from reflexa.linalg import GF, QQ, DimensionError, Matrix
from reflexa.bialgebras import (
    GROUPS,
    BialgebraError,
    BialgebraMorphism,
    FinCoalgebra,
    FiniteGroup,
    GroupTableError,
    MorphismError,
    bialgebra_from_structure,
    bialgebra_isomorphic,
    check_double_dual,
    counit_unit_morphism,
    cyclic_group,
    direct_product,
    dual_algebra,
    dual_bialgebra,
    dual_coalgebra,
    eigenvalues_in_field,
    excluded_characteristics,
    function_bialgebra,
    group_bialgebra,
    group_by_name,
    group_fixtures,
    grouplike_elements,
    is_bialgebra_morphism,
    swap_matrix,
    symmetric_group,
    transpose_bialgebra_morphism,
    transport_bialgebra,
)

FIXTURES = group_fixtures()


# ---------------------------------------------------------------------------
# Groups
# ---------------------------------------------------------------------------

class TestFiniteGroup:
    def test_builtins(self):
        assert [GROUPS[name]().order for name in GROUPS] == [2, 3, 4, 6]
        assert cyclic_group(5).is_abelian
        assert not symmetric_group(3).is_abelian
        assert direct_product(cyclic_group(2), cyclic_group(3)).order == 6

    def test_by_name(self):
        assert group_by_name("Z5") == cyclic_group(5)
        assert group_by_name("S3") == symmetric_group(3)
        with pytest.raises(GroupTableError, match="unknown group"):
            group_by_name("Q8")

    def test_inverse(self):
        s3 = symmetric_group(3)
        for a in s3.elements:
            assert s3.mul(a, s3.inverse(a)) == 0

    @pytest.mark.parametrize("table,message", [
        ([], "empty table"),
        ([[0, 1], [1]], "row 1 has 1 entries"),
        ([[0, 2], [1, 0]], "outside"),
        ([[1, 0], [0, 1]], "not the identity"),
        ([[0, 1], [1, 1]], "no inverse"),
    ])
    def test_bad_tables(self, table, message):
        with pytest.raises(GroupTableError, match=message):
            FiniteGroup(table)

    def test_non_associative(self):
        # a Latin square with identity 0 that is not a group
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(GroupTableError, match=r"\*"):
            FiniteGroup(table, "L5")

    def test_excluded_characteristics(self):
        assert excluded_characteristics(symmetric_group(3)) == {2, 3}
        assert excluded_characteristics(cyclic_group(4)) == {2}


# ---------------------------------------------------------------------------
# Structure
# ---------------------------------------------------------------------------

class TestFinBialgebra:
    @pytest.mark.parametrize("fixture", FIXTURES, ids=[x.name for x in FIXTURES])
    def test_fixtures_build(self, field, fixture):
        b = fixture.build(field)
        assert b.dim == fixture.group.order

    def test_group_algebra_is_cocommutative(self, field):
        b = group_bialgebra(symmetric_group(3), field)
        assert b.is_cocommutative()
        assert not b.is_commutative()

    def test_function_algebra_is_commutative(self, field):
        b = function_bialgebra(symmetric_group(3), field)
        assert b.is_commutative()
        assert not b.is_cocommutative()

    def test_comult_must_preserve_unit(self):
        # K x K with both idempotents grouplike
        with pytest.raises(BialgebraError, match=r"comult\(1\) != 1 \(x\) 1"):
            bialgebra_from_structure(
                QQ, product_algebra(QQ, 2).mult, (1, 1), [[(0, 0, 1)], [(1, 1, 1)]], (1, 1),
            )

    def test_algebra_axioms_surface_as_bialgebra_error(self):
        g = group_bialgebra(cyclic_group(2), QQ)
        with pytest.raises(BialgebraError, match="unit"):
            bialgebra_from_structure(QQ, g.mult, (0, 1), [[(0, 0, 1)], [(1, 1, 1)]], (1, 1))

    def test_counit_axiom(self):
        with pytest.raises(StructureError, match="counit"):
            FinCoalgebra(QQ, 1, (((0, 0, 2),),), (1,))

    def test_coproduct_indices(self):
        with pytest.raises(DimensionError, match="outside 0..0"):
            FinCoalgebra(QQ, 1, (((0, 1, 1),),), (1,))

    def test_comult_must_be_multiplicative(self, field):
        # K[Z2] with the coproduct of K^Z2
        mult = group_bialgebra(cyclic_group(2), field).mult
        with pytest.raises(BialgebraError, match=r"comult\(e0 e0\) != comult\(e0\) comult\(e0\)"):
            bialgebra_from_structure(field, mult, (1, 0), [[(0, 0, 1), (1, 1, 1)], [(0, 1, 1), (1, 0, 1)]], (1, 0))

    def test_every_fixture_builds_quickly(self):
        start = time.perf_counter()
        for field in (QQ, GF7):
            built = [fx.build(field) for fx in FIXTURES]
            assert [b.dim for b in built] == [fx.group.order for fx in FIXTURES]
        assert len(FIXTURES) == 8
        assert time.perf_counter() - start < 60

    def test_swap_is_involution(self, field):
        s = swap_matrix(field, 3)
        assert (s @ s).is_identity()


class TestMorphisms:
    def test_identity(self):
        b = group_bialgebra(cyclic_group(3), QQ)
        assert BialgebraMorphism.identity(b)((1, 2, 3)) == (1, 2, 3)

    def test_trivial_morphism(self, field):
        src = group_bialgebra(cyclic_group(2), field)
        dst = group_bialgebra(cyclic_group(3), field)
        m = counit_unit_morphism(src, dst)
        assert m.matrix.shape == (3, 2)
        assert m((1, 0)) == (1, 0, 0)

    def test_non_morphism(self):
        b = group_bialgebra(cyclic_group(2), QQ)
        swap_units = Matrix.from_rows(QQ, [[0, 1], [1, 0]])
        v = is_bialgebra_morphism(b, b, swap_units)
        assert v.status == "fail"
        assert v.witness == {"identity": "unit"}
        with pytest.raises(MorphismError, match="unit is not preserved"):
            BialgebraMorphism(b, b, swap_units)

    def test_shape_mismatch(self):
        a = group_bialgebra(cyclic_group(2), QQ)
        b = group_bialgebra(cyclic_group(3), QQ)
        v = is_bialgebra_morphism(a, b, Matrix.identity(QQ, 2))
        assert v.witness["expected"] == [3, 2]


# ---------------------------------------------------------------------------
# Duality
# ---------------------------------------------------------------------------

class TestDuality:
    @pytest.mark.parametrize("name", list(GROUPS))
    def test_dual_of_group_algebra(self, field, name):
        g = GROUPS[name]()
        assert dual_bialgebra(group_bialgebra(g, field)) == function_bialgebra(g, field)
        assert dual_bialgebra(function_bialgebra(g, field)) == group_bialgebra(g, field)

    @pytest.mark.parametrize("fixture", FIXTURES, ids=[x.name for x in FIXTURES])
    def test_double_dual(self, field, fixture):
        assert check_double_dual(fixture.build(field)).ok

    def test_dual_halves(self, field):
        g = cyclic_group(3)
        b, fn = group_bialgebra(g, field), function_bialgebra(g, field)
        assert dual_algebra(b.coalgebra) == fn.algebra
        assert dual_coalgebra(b.algebra) == fn.coalgebra
        assert dual_algebra(b.coalgebra).is_commutative()

    def test_dual_swaps_commutativity(self, field):
        b = group_bialgebra(symmetric_group(3), field)
        d = dual_bialgebra(b)
        assert d.is_commutative() == b.is_cocommutative()
        assert d.is_cocommutative() == b.is_commutative()

    def test_dual_label(self):
        assert dual_bialgebra(group_bialgebra(cyclic_group(2), QQ)).label == "(K[Z2])*"

    def test_transpose(self):
        b = group_bialgebra(cyclic_group(2), QQ)
        f = bialgebra_isomorphic(b, dual_bialgebra(b))
        assert f is not None
        t = transpose_bialgebra_morphism(f)
        assert t.matrix == f.matrix.transpose()
        assert is_bialgebra_morphism(t.source, t.target, t.matrix).ok
        tt = transpose_bialgebra_morphism(t)
        assert tt.matrix == f.matrix
        # A -> A** is the identity matrix, so f and its double transpose agree on A
        assert is_bialgebra_morphism(f.source, tt.target, tt.matrix).ok

    def test_transpose_of_trivial_morphism(self, field):
        a = group_bialgebra(cyclic_group(3), field)
        b = dual_bialgebra(group_bialgebra(cyclic_group(2), field))
        f = counit_unit_morphism(a, b)
        t = transpose_bialgebra_morphism(f)
        assert (t.source.dim, t.target.dim) == (2, 3)
        assert is_bialgebra_morphism(t.source, t.target, t.matrix).ok
        assert transpose_bialgebra_morphism(t).matrix == f.matrix

    def test_transpose_keeps_non_morphisms_out(self, field):
        a = group_bialgebra(cyclic_group(2), field)
        b = dual_bialgebra(group_bialgebra(cyclic_group(3), field))
        m = Matrix.zero(field, 3, 2)
        assert not is_bialgebra_morphism(a, b, m).ok
        assert not is_bialgebra_morphism(dual_bialgebra(b), dual_bialgebra(a), m.transpose()).ok


# ---------------------------------------------------------------------------
# Grouplikes and isomorphisms
# ---------------------------------------------------------------------------

class TestGrouplikes:
    def test_eigenvalues_over_q(self):
        assert eigenvalues_in_field(Matrix.from_rows(QQ, [[0, 1], [1, 0]])) == [-1, 1]
        assert eigenvalues_in_field(Matrix.from_rows(QQ, [[0, -1], [1, 0]])) == []

    def test_eigenvalues_mod_p(self):
        rot = [[0, -1], [1, 0]]
        assert eigenvalues_in_field(Matrix.from_rows(GF7, rot)) == []
        assert eigenvalues_in_field(Matrix.from_rows(GF(5), rot)) == [2, 3]

    def test_group_elements_are_grouplike(self, field):
        b = group_bialgebra(cyclic_group(3), field)
        assert grouplike_elements(b) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]

    def test_characters_need_roots_of_unity(self):
        z3 = cyclic_group(3)
        assert len(grouplike_elements(function_bialgebra(z3, QQ))) == 1
        assert len(grouplike_elements(function_bialgebra(z3, GF7))) == 3

    def test_sign_character(self):
        assert len(grouplike_elements(function_bialgebra(symmetric_group(3), QQ))) == 2


class TestIsomorphism:
    def test_self_dual_over_q(self):
        z2 = cyclic_group(2)
        iso = bialgebra_isomorphic(group_bialgebra(z2, QQ), function_bialgebra(z2, QQ))
        assert iso is not None
        assert is_bialgebra_morphism(iso.source, iso.target, iso.matrix).ok

    def test_roots_of_unity_decide(self):
        z3 = cyclic_group(3)
        assert bialgebra_isomorphic(group_bialgebra(z3, QQ), function_bialgebra(z3, QQ)) is None
        assert bialgebra_isomorphic(group_bialgebra(z3, GF7), function_bialgebra(z3, GF7)) is not None

    def test_non_abelian(self):
        s3 = symmetric_group(3)
        assert bialgebra_isomorphic(group_bialgebra(s3, QQ), function_bialgebra(s3, QQ)) is None

    def test_klein_four(self):
        v = direct_product(cyclic_group(2), cyclic_group(2))
        assert bialgebra_isomorphic(group_bialgebra(v, QQ), function_bialgebra(v, QQ)) is not None

    def test_identical_structures(self):
        b = group_bialgebra(cyclic_group(2), GF7)
        assert bialgebra_isomorphic(b, b.relabel("other")).matrix.is_identity()

    def test_dimension_mismatch(self):
        a = group_bialgebra(cyclic_group(2), QQ)
        b = group_bialgebra(cyclic_group(3), QQ)
        assert bialgebra_isomorphic(a, b) is None

    def test_transport_is_an_isomorphism(self):
        b = group_bialgebra(cyclic_group(2), QQ)
        t = Matrix.from_rows(QQ, [[1, 2], [0, 1]])
        moved = transport_bialgebra(b, t)
        assert not moved.same_structure(b)
        assert is_bialgebra_morphism(b, moved, t).ok

    def test_basis_change_without_spanning_grouplikes(self):
        # K^Z3 over Q has only the trivial grouplike; its characters pin the map down
        b = function_bialgebra(cyclic_group(3), QQ)
        moved = transport_bialgebra(b, Matrix.from_rows(QQ, [[1, 1, 0], [0, 1, 0], [0, 0, 1]]))
        assert len(grouplike_elements(b)) == len(grouplike_elements(moved)) == 1
        iso = bialgebra_isomorphic(b, moved)
        assert iso is not None
        assert is_bialgebra_morphism(b, moved, iso.matrix).ok

    def test_basis_change_of_s3_mod_p(self):
        b = group_bialgebra(symmetric_group(3), GF7)
        t = Matrix.from_rows(GF7, [[1 if i == j else (2 if j == i + 1 else 0) for j in range(6)] for i in range(6)])
        moved = transport_bialgebra(b, t)
        iso = bialgebra_isomorphic(b, moved)
        assert iso is not None
        assert iso.target is moved

    def test_character_counts_decide(self):
        s3 = symmetric_group(3)
        a = dual_bialgebra(group_bialgebra(s3, GF7))
        assert bialgebra_isomorphic(a, function_bialgebra(s3, GF7)) is not None
        assert bialgebra_isomorphic(a, group_bialgebra(s3, GF7)) is None
