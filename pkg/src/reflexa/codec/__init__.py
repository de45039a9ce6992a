"""JSON input and output: file loading and model <-> runtime conversion.

Example::

    from reflexa.codec import load_model, tower_from_model
    from reflexa.model import TowerModel

    tower = tower_from_model(load_model("tower.json", TowerModel))
"""

from ._convert import (
    algebra_from_model,
    algebra_to_model,
    bialgebra_from_model,
    bialgebra_to_model,
    direct_system_to_model,
    field_from_spec,
    field_to_spec,
    functional_from_model,
    functional_to_model,
    group_from_model,
    group_to_model,
    linear_map_from_model,
    linear_map_to_model,
    matrix_from_model,
    matrix_to_model,
    module_from_model,
    module_to_model,
    prefix_from_model,
    tower_from_model,
    tower_to_model,
    universe_from_model,
)
from ._load import InputError, dump_model, load_model, parse_model

__all__ = [
    # Files
    "InputError",
    "load_model",
    "parse_model",
    "dump_model",
    # Fields and linear data
    "field_from_spec",
    "field_to_spec",
    "matrix_from_model",
    "matrix_to_model",
    "module_from_model",
    "module_to_model",
    "linear_map_from_model",
    "linear_map_to_model",
    # Structures
    "algebra_from_model",
    "algebra_to_model",
    "universe_from_model",
    "tower_from_model",
    "tower_to_model",
    "direct_system_to_model",
    "bialgebra_from_model",
    "bialgebra_to_model",
    "group_from_model",
    "group_to_model",
    "functional_from_model",
    "functional_to_model",
    "prefix_from_model",
]
