"""Conversion between the JSON models and runtime objects.

``*_from_model`` functions build validated runtime values (so structural
errors surface as the runtime package's exceptions); ``*_to_model``
functions produce models whose ``model_dump(mode="json")`` is the
documented wire format.
"""

from __future__ import annotations

from reflexa.algebras import FinAlgebra, TestAlgebra
from reflexa.bialgebras import FinBialgebra, FiniteGroup, bialgebra_from_structure
from reflexa.findual import RecursiveFunctional
from reflexa.functors import Universe, UniverseMorphism
from reflexa.linalg import QQ, Field, GF, Matrix, PrimeField
from reflexa.model import (
    AlgebraModel,
    BialgebraModel,
    DirectSystemModel,
    FieldSpec,
    GFSpec,
    GroupModel,
    LinearMapModel,
    MatrixModel,
    ModuleModel,
    RecursiveFunctionalModel,
    SequencePrefixModel,
    TowerModel,
    UniverseModel,
)
from reflexa.modules import FinModule, LinearMap
from reflexa.towers import DirectSystem, Tower


# -- Fields and matrices ------------------------------------------------------

def field_from_spec(spec: FieldSpec) -> Field:
    if isinstance(spec, GFSpec):
        return GF(spec.GF)
    return QQ


def field_to_spec(field: Field) -> FieldSpec:
    if isinstance(field, PrimeField):
        return GFSpec(GF=field.characteristic)
    return "Q"


def matrix_from_model(field: Field, m: MatrixModel) -> Matrix:
    return Matrix.from_rows(field, m.entries, m.cols)


def matrix_to_model(m: Matrix) -> MatrixModel:
    return MatrixModel.model_validate(m.to_dict())


# -- Modules and maps -----------------------------------------------------------

def module_from_model(m: ModuleModel) -> FinModule:
    return FinModule(field_from_spec(m.field), m.rank, m.label)


def module_to_model(m: FinModule) -> ModuleModel:
    return ModuleModel(field=field_to_spec(m.field), rank=m.rank, label=m.label)


def linear_map_from_model(m: LinearMapModel) -> LinearMap:
    f = field_from_spec(m.field)
    dom = FinModule(f, m.domain.rank, m.domain.label)
    cod = FinModule(f, m.codomain.rank, m.codomain.label)
    return LinearMap(dom, cod, matrix_from_model(f, m.matrix))


def linear_map_to_model(f: LinearMap) -> LinearMapModel:
    return LinearMapModel(
        field=field_to_spec(f.matrix.field),
        domain=module_to_model(f.domain),
        codomain=module_to_model(f.codomain),
        matrix=matrix_to_model(f.matrix),
    )


# -- Algebras and universes -------------------------------------------------------

def _mult_table(a: FinAlgebra) -> list[list[list[str]]]:
    fmt = a.field.format
    return [[[fmt(x) for x in a.basis_product(i, j)] for j in range(a.dim)] for i in range(a.dim)]


def algebra_from_model(m: AlgebraModel, field: Field | None = None) -> FinAlgebra:
    f = field or field_from_spec(m.field)
    return FinAlgebra.from_products(f, m.dim, lambda i, j: m.mult[i][j], m.unit, m.label)


def algebra_to_model(a: FinAlgebra) -> AlgebraModel:
    fmt = a.field.format
    return AlgebraModel(
        field=field_to_spec(a.field),
        dim=a.dim,
        mult=_mult_table(a),
        unit=[fmt(x) for x in a.unit],
        label=a.label,
    )


def universe_from_model(m: UniverseModel, name: str = "") -> Universe:
    """The closure of the listed morphisms over the listed algebras."""
    f = field_from_spec(m.field)
    algebras = [TestAlgebra.of(algebra_from_model(a, f)) for a in m.algebras]
    gens = [UniverseMorphism(g.src, g.dst, matrix_from_model(f, g.matrix)) for g in m.morphisms]
    return Universe.close(f, algebras, gens, base=m.base, name=name)


# -- Towers ---------------------------------------------------------------------------

def tower_from_model(m: TowerModel, name: str = "") -> Tower:
    f = field_from_spec(m.field)
    levels = [FinModule(f, lv.rank, lv.label) for lv in m.levels]
    return Tower(f, levels, [matrix_from_model(f, x) for x in m.maps], name)


def tower_to_model(t: Tower) -> TowerModel:
    return TowerModel(
        field=field_to_spec(t.field),
        levels=[module_to_model(lv) for lv in t.levels],
        maps=[matrix_to_model(x) for x in t.maps],
    )


def direct_system_to_model(d: DirectSystem) -> DirectSystemModel:
    return DirectSystemModel(
        field=field_to_spec(d.field),
        levels=[module_to_model(lv) for lv in d.levels],
        maps=[matrix_to_model(x) for x in d.maps],
    )


# -- Bialgebras and groups ---------------------------------------------------------------

def bialgebra_from_model(m: BialgebraModel) -> FinBialgebra:
    f = field_from_spec(m.field)
    n = m.dim
    mult = Matrix.from_columns(f, [m.mult[i][j] for i in range(n) for j in range(n)], n)
    return bialgebra_from_structure(f, mult, m.unit, m.comult, m.counit, m.label)


def bialgebra_to_model(b: FinBialgebra) -> BialgebraModel:
    fmt = b.field.format
    return BialgebraModel(
        field=field_to_spec(b.field),
        dim=b.dim,
        mult=_mult_table(b.algebra),
        unit=[fmt(x) for x in b.unit],
        label=b.label,
        comult=[[(j, k, fmt(c)) for j, k, c in row] for row in b.coalgebra.comult],
        counit=[fmt(x) for x in b.counit],
    )


def group_from_model(m: GroupModel) -> FiniteGroup:
    return FiniteGroup(m.table, m.name or f"G{m.order}")


def group_to_model(g: FiniteGroup) -> GroupModel:
    return GroupModel(order=g.order, table=[list(r) for r in g.table], name=g.name)


# -- Finite dual -------------------------------------------------------------------------

def functional_from_model(m: RecursiveFunctionalModel) -> RecursiveFunctional:
    return RecursiveFunctional(field_from_spec(m.field), m.model, tuple(m.annihilator), tuple(m.values))


def functional_to_model(r: RecursiveFunctional) -> RecursiveFunctionalModel:
    fmt = r.field.format
    return RecursiveFunctionalModel(
        field=field_to_spec(r.field),
        model=r.model,
        annihilator=[fmt(c) for c in r.annihilator],
        values=[fmt(v) for v in r.values],
    )


def prefix_from_model(m: SequencePrefixModel) -> tuple[Field, tuple]:
    f = field_from_spec(m.field)
    return f, f.vector(m.values)
