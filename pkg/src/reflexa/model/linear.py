"""JSON models for fields, matrices, modules and linear maps."""

from __future__ import annotations

from typing import Annotated, Any, Literal, Union

from pydantic import BaseModel, BeforeValidator, Field, model_validator


def _scalar_to_str(value: Any) -> Any:
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    return value


Scalar = Annotated[str, BeforeValidator(_scalar_to_str)]
"""A serialized field element: ``"a/b"``, ``"a"`` or ``"r mod p"``."""


class GFSpec(BaseModel):
    """``{"GF": p}``"""

    GF: int = Field(ge=2)


FieldSpec = Union[Literal["Q"], GFSpec]


class MatrixModel(BaseModel):
    rows: int = Field(ge=0)
    cols: int = Field(ge=0)
    entries: list[list[Scalar]]

    @model_validator(mode="after")
    def _shape_check(self):
        if len(self.entries) != self.rows:
            raise ValueError(f"declared {self.rows} rows, found {len(self.entries)}")
        for i, row in enumerate(self.entries):
            if len(row) != self.cols:
                raise ValueError(f"row {i} has {len(row)} entries, expected {self.cols}")
        return self


class ModuleModel(BaseModel):
    field: FieldSpec = "Q"
    rank: int = Field(ge=0)
    label: str = ""


class LinearMapModel(BaseModel):
    field: FieldSpec = "Q"
    domain: ModuleModel
    codomain: ModuleModel
    matrix: MatrixModel

    @model_validator(mode="after")
    def _shape_check(self):
        if (self.matrix.rows, self.matrix.cols) != (self.codomain.rank, self.domain.rank):
            raise ValueError(
                f"matrix is {self.matrix.rows}x{self.matrix.cols}, "
                f"map needs {self.codomain.rank}x{self.domain.rank}"
            )
        return self
