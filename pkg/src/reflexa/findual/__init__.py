"""The finite dual of K[x] as linearly recursive functionals."""

from ._functional import (
    MODELS,
    Model,
    ModelMismatchError,
    RecurrenceError,
    RecursiveFunctional,
    binomial_rows,
    extend_sequence,
    find_recurrence,
)

__all__ = [
    "RecursiveFunctional",
    "Model",
    "MODELS",
    "RecurrenceError",
    "ModelMismatchError",
    "extend_sequence",
    "find_recurrence",
    "binomial_rows",
]
