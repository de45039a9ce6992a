"""Functors of modules on finite universes of test algebras.

A functor is stored as data (one module and action per algebra, one
transition per morphism) and every Hom space between functors is solved
as one exact linear system::

    from reflexa.functors import reference_universe, quasicoherent_on_universe, nat_hom_space

    u = reference_universe(QQ)
    F = quasicoherent_on_universe(FinModule(QQ, 2), u)
    nat_hom_space(F, F).dim   # 4
"""

from ._adjunction import AdjunctionSetting, Comparison, pushforward, verify_adjunction
from ._criteria import AlgebraAction, CriterionResult, module_morphism_criterion, submodule_criterion
from ._dual import (
    DualFunctor,
    Factorization,
    PreconditionError,
    check_d_proquasicoherent,
    check_reflexive,
    double_dual_unit_on_universe,
    dual_on_universe,
    factor_through_image,
    format_vector,
)
from ._functor import (
    FunctorError,
    FunctorOnUniverse,
    nilradical_functor,
    quasicoherent_on_universe,
    restrict_functor,
    subfunctor,
    tensor_functors,
    zero_functor,
)
from ._solver import NatHomSpace, compose_families, nat_hom_space, solve_until_stable
from ._universe import (
    Universe,
    UniverseError,
    UniverseMorphism,
    base_universe,
    enlarge_universe,
    reference_universe,
)

__all__ = [
    # Universes
    "Universe",
    "UniverseMorphism",
    "UniverseError",
    "reference_universe",
    "base_universe",
    "enlarge_universe",
    # Functors
    "FunctorOnUniverse",
    "FunctorError",
    "quasicoherent_on_universe",
    "zero_functor",
    "subfunctor",
    "nilradical_functor",
    "restrict_functor",
    "tensor_functors",
    # Solver
    "NatHomSpace",
    "nat_hom_space",
    "compose_families",
    "solve_until_stable",
    # Duality
    "DualFunctor",
    "dual_on_universe",
    "double_dual_unit_on_universe",
    "check_reflexive",
    "check_d_proquasicoherent",
    "Factorization",
    "factor_through_image",
    "PreconditionError",
    "format_vector",
    # Criteria
    "AlgebraAction",
    "CriterionResult",
    "submodule_criterion",
    "module_morphism_criterion",
    # Adjunction
    "AdjunctionSetting",
    "Comparison",
    "pushforward",
    "verify_adjunction",
]
