"""Finite-dimensional bialgebras, their duals and the group fixtures.

Example::

    from reflexa.bialgebras import GROUPS, dual_bialgebra, function_bialgebra, group_bialgebra
    from reflexa.linalg import QQ

    g = GROUPS["S3"]()
    assert dual_bialgebra(group_bialgebra(g, QQ)) == function_bialgebra(g, QQ)
"""

from ._bialgebra import (
    BialgebraMorphism,
    FinBialgebra,
    bialgebra_from_structure,
    counit_unit_morphism,
    is_bialgebra_morphism,
    transport_bialgebra,
)
from ._coalgebra import BialgebraError, FinCoalgebra, MorphismError, swap_matrix
from ._duality import (
    check_double_dual,
    double_dual_unit,
    dual_algebra,
    dual_bialgebra,
    dual_coalgebra,
    transpose_bialgebra_morphism,
)
from ._grouplike import bialgebra_isomorphic, eigenvalues_in_field, grouplike_elements
from ._groups import (
    GROUPS,
    BialgebraFixture,
    FiniteGroup,
    GroupTableError,
    cyclic_group,
    direct_product,
    excluded_characteristics,
    function_bialgebra,
    group_bialgebra,
    group_by_name,
    group_fixtures,
    symmetric_group,
)

__all__ = [
    # Types
    "FinCoalgebra",
    "FinBialgebra",
    "BialgebraMorphism",
    "FiniteGroup",
    "BialgebraFixture",
    # Errors
    "BialgebraError",
    "MorphismError",
    "GroupTableError",
    # Structure
    "swap_matrix",
    "bialgebra_from_structure",
    "is_bialgebra_morphism",
    "counit_unit_morphism",
    "transport_bialgebra",
    # Duality
    "dual_algebra",
    "dual_coalgebra",
    "dual_bialgebra",
    "double_dual_unit",
    "check_double_dual",
    "transpose_bialgebra_morphism",
    # Grouplikes
    "eigenvalues_in_field",
    "grouplike_elements",
    "bialgebra_isomorphic",
    # Groups
    "GROUPS",
    "cyclic_group",
    "direct_product",
    "symmetric_group",
    "group_by_name",
    "excluded_characteristics",
    "group_bialgebra",
    "function_bialgebra",
    "group_fixtures",
]
