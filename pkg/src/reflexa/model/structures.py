"""JSON models for algebras, universes, towers, bialgebras, groups and
recursive functionals."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, model_validator

from .linear import FieldSpec, MatrixModel, ModuleModel, Scalar


class AlgebraModel(BaseModel):
    """``mult[i][j]`` is the coefficient vector of e_i e_j."""

    field: FieldSpec = "Q"
    dim: int = Field(ge=1)
    mult: list[list[list[Scalar]]]
    unit: list[Scalar]
    label: str = ""

    @model_validator(mode="after")
    def _shape_check(self):
        n = self.dim
        if len(self.mult) != n or any(len(row) != n for row in self.mult):
            raise ValueError(f"mult must be a {n}x{n} table of coefficient vectors")
        for i, row in enumerate(self.mult):
            for j, coeffs in enumerate(row):
                if len(coeffs) != n:
                    raise ValueError(f"mult[{i}][{j}] has {len(coeffs)} coefficients, expected {n}")
        if len(self.unit) != n:
            raise ValueError(f"unit has {len(self.unit)} coefficients, expected {n}")
        return self


class MorphismModel(BaseModel):
    src: int = Field(ge=0)
    dst: int = Field(ge=0)
    matrix: MatrixModel


class UniverseModel(BaseModel):
    field: FieldSpec = "Q"
    algebras: list[AlgebraModel]
    morphisms: list[MorphismModel] = []
    base: int = 0

    @model_validator(mode="after")
    def _index_check(self):
        n = len(self.algebras)
        if not 0 <= self.base < n:
            raise ValueError(f"base index {self.base} out of range for {n} algebras")
        for k, m in enumerate(self.morphisms):
            if m.src >= n or m.dst >= n:
                raise ValueError(f"morphism {k} refers to a missing algebra")
        return self


class TowerModel(BaseModel):
    """``maps[n]`` goes from ``levels[n + 1]`` to ``levels[n]``."""

    field: FieldSpec = "Q"
    levels: list[ModuleModel]
    maps: list[MatrixModel]

    @model_validator(mode="after")
    def _chain_check(self):
        if not self.levels:
            raise ValueError("a tower needs at least one level")
        if len(self.maps) != len(self.levels) - 1:
            raise ValueError(f"{len(self.levels)} levels need {len(self.levels) - 1} maps, got {len(self.maps)}")
        for n, m in enumerate(self.maps):
            if (m.rows, m.cols) != (self.levels[n].rank, self.levels[n + 1].rank):
                raise ValueError(f"map {n} must be {self.levels[n].rank}x{self.levels[n + 1].rank}")
        return self


class DirectSystemModel(BaseModel):
    """``maps[n]`` goes from ``levels[n]`` to ``levels[n + 1]``."""

    field: FieldSpec = "Q"
    levels: list[ModuleModel]
    maps: list[MatrixModel]

    @model_validator(mode="after")
    def _chain_check(self):
        if len(self.maps) != len(self.levels) - 1:
            raise ValueError(f"{len(self.levels)} levels need {len(self.levels) - 1} maps, got {len(self.maps)}")
        for n, m in enumerate(self.maps):
            if (m.rows, m.cols) != (self.levels[n + 1].rank, self.levels[n].rank):
                raise ValueError(f"map {n} must be {self.levels[n + 1].rank}x{self.levels[n].rank}")
        return self


class BialgebraModel(AlgebraModel):
    """``comult[i]`` lists the ``[j, k, coeff]`` terms of the coproduct of e_i."""

    comult: list[list[tuple[int, int, Scalar]]]
    counit: list[Scalar]

    @model_validator(mode="after")
    def _coalgebra_shape_check(self):
        n = self.dim
        if len(self.comult) != n:
            raise ValueError(f"comult has {len(self.comult)} entries, expected {n}")
        for i, terms in enumerate(self.comult):
            for j, k, _ in terms:
                if not (0 <= j < n and 0 <= k < n):
                    raise ValueError(f"comult[{i}] refers to basis index outside 0..{n - 1}")
        if len(self.counit) != n:
            raise ValueError(f"counit has {len(self.counit)} coefficients, expected {n}")
        return self


class GroupModel(BaseModel):
    """Cayley table with 0-based indices; index 0 is the identity."""

    order: int = Field(ge=1)
    table: list[list[int]]
    name: str = ""

    @model_validator(mode="after")
    def _shape_check(self):
        n = self.order
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValueError(f"table must be {n}x{n}")
        for row in self.table:
            for x in row:
                if not 0 <= x < n:
                    raise ValueError(f"table entry {x} out of range 0..{n - 1}")
        return self


class RecursiveFunctionalModel(BaseModel):
    """``annihilator`` lists coefficients from degree 0 up; the last is ``"1"``."""

    field: FieldSpec = "Q"
    model: Literal["primitive", "grouplike"]
    annihilator: list[Scalar]
    values: list[Scalar]

    @model_validator(mode="after")
    def _degree_check(self):
        if len(self.annihilator) < 2:
            raise ValueError("annihilator must have degree >= 1")
        if len(self.values) != len(self.annihilator) - 1:
            raise ValueError(
                f"annihilator of degree {len(self.annihilator) - 1} needs "
                f"{len(self.annihilator) - 1} values, got {len(self.values)}"
            )
        return self


class SequencePrefixModel(BaseModel):
    """Raw values l(1), l(x), ... to fit with a recurrence."""

    field: FieldSpec = "Q"
    model: Literal["primitive", "grouplike"] = "grouplike"
    values: list[Scalar] = Field(min_length=1)
    max_degree: int = Field(default=4, ge=1)
