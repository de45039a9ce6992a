"""Submodule and morphism criteria for modules over a quasi-coherent algebra.

An algebra A acting on M makes qc(M) a module over qc(A): the algebra
A (x) S acts on M (x) S factorwise.  Both criteria compare the statement
over K with the statement at every algebra of a universe, computed
independently of each other.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from reflexa.algebras import FinAlgebra, StructureError
from reflexa.linalg import (
    Matrix,
    check_same_field,
    in_span,
    kron,
    kron_vector,
    span_basis,
)
from reflexa.model import Verdict
from reflexa.modules import LinearMap

from ._dual import format_vector
from ._universe import Universe


@dataclass(frozen=True, eq=False)
class AlgebraAction:
    """A left A-module structure on K^rank; column ``a * rank + j`` of ``action`` is e_a . m_j."""

    algebra: FinAlgebra
    rank: int
    action: Matrix

    def __post_init__(self) -> None:
        a, r, f = self.algebra, self.rank, self.algebra.field
        check_same_field(f, self.action.field)
        if self.action.shape != (r, a.dim * r):
            raise StructureError(f"action matrix must be {r}x{a.dim * r}, got {self.action.shape}")
        eye = Matrix.identity(f, r)
        if self.action @ kron(Matrix.column_vector(f, a.unit), eye) != eye:
            raise StructureError("algebra action is not unital")
        if self.action @ kron(a.mult, eye) != self.action @ kron(Matrix.identity(f, a.dim), self.action):
            raise StructureError("algebra action is not associative")

    @classmethod
    def regular(cls, a: FinAlgebra) -> AlgebraAction:
        """A acting on itself by left multiplication."""
        return cls(a, a.dim, a.mult)

    def operator(self, element: Sequence[Any]) -> Matrix:
        """Matrix of m |-> element . m."""
        f = self.algebra.field
        return self.action @ kron(Matrix.column_vector(f, element), Matrix.identity(f, self.rank))

    def basis_operator(self, a: int) -> Matrix:
        return self.operator(self.algebra.field.unit_vector(self.algebra.dim, a))


@dataclass(frozen=True)
class CriterionResult:
    """Truth of a statement over K and on the universe, with a counterexample if any."""

    at_base: bool
    on_universe: bool
    witness: dict[str, Any] | None = None

    @property
    def agree(self) -> bool:
        return self.at_base == self.on_universe

    def verdict(self, what: str) -> Verdict:
        details = {"at_base": self.at_base, "on_universe": self.on_universe}
        if self.agree:
            if self.witness is not None:
                details["counterexample"] = self.witness
            return Verdict.passed(f"{what}: base and universe agree ({self.at_base})", **details)
        return Verdict.failed(f"{what}: base and universe disagree", self.witness or {}, **details)


def submodule_criterion(
    action: AlgebraAction,
    generators: Sequence[Sequence[Any]],
    universe: Universe,
) -> CriterionResult:
    """M' is an A-submodule of M iff qc(M') is a qc(A)-submodule of qc(M) on the universe.

    ``generators`` may be dependent; a basis is extracted.
    """
    f, r, alg = action.algebra.field, action.rank, action.algebra
    basis = span_basis(f, r, generators)
    witness = None

    at_base = True
    for a in range(alg.dim):
        op = action.basis_operator(a)
        for b in basis:
            moved = op.apply(b)
            if not in_span(f, r, basis, moved):
                at_base = False
                witness = {"element": a, "vector": format_vector(f, b), "product": format_vector(f, moved)}
                break
        if not at_base:
            break

    on_universe = True
    for i, s_alg in enumerate(universe.algebras):
        d = s_alg.dim
        sub = [kron_vector(f, b, f.unit_vector(d, t)) for b in basis for t in range(d)]
        for a in range(alg.dim):
            op = action.basis_operator(a)
            for s in range(d):
                big = kron(op, s_alg.left_multiplication(f.unit_vector(d, s)))
                for v in sub:
                    if not in_span(f, r * d, sub, big.apply(v)):
                        on_universe = False
                        if witness is None:
                            witness = {"algebra": universe.label(i), "element": [a, s], "vector": format_vector(f, v)}
                        break
                if not on_universe:
                    break
            if not on_universe:
                break
        if not on_universe:
            break

    return CriterionResult(at_base, on_universe, witness)


def module_morphism_criterion(
    source: AlgebraAction,
    target: AlgebraAction,
    f: LinearMap,
    universe: Universe,
) -> CriterionResult:
    """f_K is A-linear iff f (x) id is (A (x) S)-linear at every S of the universe."""
    alg = source.algebra
    if target.algebra != alg:
        raise StructureError("source and target must be modules over the same algebra")
    fld = alg.field
    m = f.matrix
    witness = None

    at_base = True
    for a in range(alg.dim):
        lhs = m @ source.basis_operator(a)
        rhs = target.basis_operator(a) @ m
        if lhs != rhs:
            j = next(j for j in range(lhs.cols) if lhs.column(j) != rhs.column(j))
            at_base = False
            witness = {
                "element": a,
                "vector": format_vector(fld, fld.unit_vector(source.rank, j)),
                "f(a.m)": format_vector(fld, lhs.column(j)),
                "a.f(m)": format_vector(fld, rhs.column(j)),
            }
            break

    on_universe = True
    for i, s_alg in enumerate(universe.algebras):
        d = s_alg.dim
        eye = Matrix.identity(fld, d)
        big_f = kron(m, eye)
        for a in range(alg.dim):
            for s in range(d):
                left = s_alg.left_multiplication(fld.unit_vector(d, s))
                if big_f @ kron(source.basis_operator(a), left) != kron(target.basis_operator(a), left) @ big_f:
                    on_universe = False
                    if witness is None:
                        witness = {"algebra": universe.label(i), "element": [a, s]}
                    break
            if not on_universe:
                break
        if not on_universe:
            break

    return CriterionResult(at_base, on_universe, witness)
