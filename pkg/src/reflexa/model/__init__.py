"""Serializable data models: check verdicts and every JSON input format."""

from .linear import (
    FieldSpec,
    GFSpec,
    LinearMapModel,
    MatrixModel,
    ModuleModel,
    Scalar,
)
from .structures import (
    AlgebraModel,
    BialgebraModel,
    DirectSystemModel,
    GroupModel,
    MorphismModel,
    RecursiveFunctionalModel,
    SequencePrefixModel,
    TowerModel,
    UniverseModel,
)
from .verdict import Status, Verdict

__all__ = [
    "Verdict",
    "Status",
    "Scalar",
    "FieldSpec",
    "GFSpec",
    "MatrixModel",
    "ModuleModel",
    "LinearMapModel",
    "AlgebraModel",
    "MorphismModel",
    "UniverseModel",
    "TowerModel",
    "DirectSystemModel",
    "BialgebraModel",
    "GroupModel",
    "RecursiveFunctionalModel",
    "SequencePrefixModel",
]
