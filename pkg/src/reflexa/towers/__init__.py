"""Towers: finite prefixes of inverse systems of modules and algebras."""

from ._operations import (
    KernelSplitting,
    ProductDecomposition,
    completed_tensor,
    dual_tower,
    kernel_tower,
    product_decomposition,
    reflexivity_roundtrip,
    stabilized_images,
)
from ._series import (
    TOWER_GENERATORS,
    builtin_tower,
    constant_tower,
    power_series_tower,
    product_tower,
    ps_element,
    ps_invert,
    ps_mul,
    ps_truncate,
)
from ._tower import (
    AlgebraTower,
    DirectSystem,
    InconsistentFunctionalError,
    NonSurjectiveError,
    NotAUnitError,
    Tower,
    TowerElement,
    TowerError,
    TowerFunctional,
    TowerGenerator,
)
from ._universal import algebra_generators, algebra_morphisms, verify_tensor_universal_property

__all__ = [
    # Types
    "Tower",
    "AlgebraTower",
    "TowerElement",
    "TowerFunctional",
    "TowerGenerator",
    "DirectSystem",
    # Errors
    "TowerError",
    "NonSurjectiveError",
    "InconsistentFunctionalError",
    "NotAUnitError",
    # Operations
    "stabilized_images",
    "ProductDecomposition",
    "product_decomposition",
    "dual_tower",
    "reflexivity_roundtrip",
    "KernelSplitting",
    "kernel_tower",
    "completed_tensor",
    # Built-ins and power series
    "power_series_tower",
    "product_tower",
    "constant_tower",
    "builtin_tower",
    "TOWER_GENERATORS",
    "ps_truncate",
    "ps_mul",
    "ps_invert",
    "ps_element",
    # Universal property
    "algebra_generators",
    "algebra_morphisms",
    "verify_tensor_universal_property",
]
