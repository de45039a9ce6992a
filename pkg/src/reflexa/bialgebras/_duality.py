"""Linear duals of algebras, coalgebras and bialgebras.

In the dual basis the dual structure maps are transposes: the
multiplication of A* is the transpose of the comultiplication of A and
vice versa, and unit and counit trade places.  The double dual of a
finite-dimensional bialgebra is therefore equal to it, with the
canonical map the identity matrix.
"""

from __future__ import annotations

import logging

from reflexa.algebras import FinAlgebra, StructureError
from reflexa.linalg import Matrix
from reflexa.model import Verdict

from ._bialgebra import BialgebraMorphism, FinBialgebra, is_bialgebra_morphism
from ._coalgebra import BialgebraError, FinCoalgebra, MorphismError

logger = logging.getLogger(__name__)


def _dual_label(label: str) -> str:
    return f"({label})*" if label else ""


def dual_algebra(c: FinCoalgebra) -> FinAlgebra:
    """C* with (xy)(v) = (x (x) y)(comult v)."""
    return FinAlgebra(c.field, c.dim, c.comult_matrix.transpose(), c.counit, _dual_label(c.label))


def dual_coalgebra(a: FinAlgebra) -> FinCoalgebra:
    """A* with comult(x)(u (x) v) = x(uv)."""
    return FinCoalgebra.from_matrix(a.field, a.mult.transpose(), a.unit, _dual_label(a.label))


def dual_bialgebra(b: FinBialgebra) -> FinBialgebra:
    try:
        return FinBialgebra(dual_algebra(b.coalgebra), dual_coalgebra(b.algebra), _dual_label(b.label))
    except StructureError as exc:
        raise BialgebraError(f"dual of {b.name}: {exc}") from exc


def double_dual_unit(b: FinBialgebra) -> BialgebraMorphism:
    """The canonical B -> B**."""
    return BialgebraMorphism(b, dual_bialgebra(dual_bialgebra(b)), Matrix.identity(b.field, b.dim))


def check_double_dual(b: FinBialgebra) -> Verdict:
    bb = dual_bialgebra(dual_bialgebra(b))
    v = is_bialgebra_morphism(b, bb, Matrix.identity(b.field, b.dim))
    if not v.ok:
        return v
    return Verdict.passed("canonical map to the double dual is an isomorphism", dim=b.dim)


def transpose_bialgebra_morphism(f: BialgebraMorphism) -> BialgebraMorphism:
    """From f: A -> B* build f^t: B -> A* with f^t(b)(a) = f(a)(b).

    ``f.target`` must be a dual bialgebra; its predual is recovered as
    its own dual.
    """
    a = f.source
    b = dual_bialgebra(f.target)
    try:
        out = BialgebraMorphism(b, dual_bialgebra(a), f.matrix.transpose())
    except MorphismError:
        logger.debug("transpose of a morphism into %s failed to be a morphism", f.target.name)
        raise
    return out
