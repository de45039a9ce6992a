"""Finite-rank modules over the base field and their duality constructions."""

from ._module import FinModule, LinearMap
from ._duality import (
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

__all__ = [
    "FinModule",
    "LinearMap",
    "dual_module",
    "dual_map",
    "double_dual_unit",
    "tensor",
    "tensor_map",
    "evaluation",
    "coevaluation",
    "snake_identity",
    "hom_module",
    "tensor_to_hom",
    "hom_to_tensor",
    "hom_from_dual_source",
    "hom_element_to_map",
    "map_to_hom_element",
    "hom_from_product",
]
