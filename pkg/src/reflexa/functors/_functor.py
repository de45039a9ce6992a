"""Functors of modules evaluated on a finite universe.

For every algebra S of the universe a functor supplies a module F(S) of
rank r_S and an action matrix ``act_S`` of shape ``r_S x (dim S * r_S)``
whose column ``s * r_S + j`` is e_s . m_j.  For every morphism phi it
supplies the transition matrix t_phi: F(src) -> F(dst).
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Any

from reflexa.algebras import TestAlgebra, nilradical
from reflexa.errors import ReflexaError
from reflexa.linalg import (
    Matrix,
    Vector,
    check_same_field,
    kernel_basis,
    kron,
    kron_vector,
    rank,
    solve,
)
from reflexa.modules import FinModule

from ._universe import Universe, UniverseError

logger = logging.getLogger(__name__)


class FunctorError(ReflexaError):
    """Functor data violate the action or functoriality laws."""


class FunctorOnUniverse:
    """A functor of modules on a finite universe, validated on construction.

    Parameters
    ----------
    universe : Universe
    ranks : sequence of int
        rank of F(S) for each algebra S.
    actions : sequence of Matrix
        module action of S on F(S), one per algebra.
    transitions : sequence of Matrix
        F(phi), one per morphism of the universe.
    """

    def __init__(
        self,
        universe: Universe,
        ranks: Sequence[int],
        actions: Sequence[Matrix],
        transitions: Sequence[Matrix],
        label: str = "",
    ) -> None:
        self.universe = universe
        self.field = universe.field
        self.ranks = tuple(ranks)
        self.actions = tuple(actions)
        self.transitions = tuple(transitions)
        self.label = label
        if len(self.ranks) != len(universe.algebras) or len(self.actions) != len(universe.algebras):
            raise FunctorError("one module and one action per algebra are required")
        if len(self.transitions) != len(universe.morphisms):
            raise FunctorError("one transition per morphism is required")
        self._validate()

    # -- Validation ----------------------------------------------------------

    def _validate(self) -> None:
        u, f = self.universe, self.field
        for i, (a, r, act) in enumerate(zip(u.algebras, self.ranks, self.actions)):
            check_same_field(f, act.field)
            name = u.label(i)
            if act.shape != (r, a.dim * r):
                raise FunctorError(f"action at {name} has shape {act.shape}, expected {(r, a.dim * r)}")
            eye = Matrix.identity(f, r)
            if act @ kron(Matrix.column_vector(f, a.unit), eye) != eye:
                raise FunctorError(f"action at {name} is not unital")
            if act @ kron(a.mult, eye) != act @ kron(Matrix.identity(f, a.dim), act):
                raise FunctorError(f"action at {name} is not associative")

        for k, (m, t) in enumerate(zip(u.morphisms, self.transitions)):
            if t.shape != (self.ranks[m.dst], self.ranks[m.src]):
                raise FunctorError(f"transition {k} has shape {t.shape}")
            if t @ self.actions[m.src] != self.actions[m.dst] @ kron(m.matrix, t):
                raise FunctorError(
                    f"transition {k} ({u.label(m.src)} -> {u.label(m.dst)}) is not semilinear"
                )
        for i, k in enumerate(u.identities):
            if not self.transitions[k].is_identity():
                raise FunctorError(f"transition of the identity of {u.label(i)} is not the identity")
        for (j, i), k in u.composition.items():
            if self.transitions[j] @ self.transitions[i] != self.transitions[k]:
                raise FunctorError(f"transitions do not compose: t[{j}] t[{i}] != t[{k}]")

    # -- Queries -------------------------------------------------------------

    def module(self, i: int) -> FinModule:
        return FinModule(self.field, self.ranks[i], f"{self.label}({self.universe.label(i)})" if self.label else "")

    def action_by(self, i: int, element: Sequence[Any]) -> Matrix:
        """Matrix of m |-> s . m on F(S_i) for ``s = element``."""
        r = self.ranks[i]
        col = Matrix.column_vector(self.field, element)
        return self.actions[i] @ kron(col, Matrix.identity(self.field, r))

    def transition(self, src: int, dst: int, matrix: Matrix) -> Matrix:
        k = self.universe.find_morphism(src, dst, matrix)
        if k is None:
            raise UniverseError(
                f"no morphism {self.universe.label(src)} -> {self.universe.label(dst)} with the requested matrix"
            )
        return self.transitions[k]

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.ranks)

    def __repr__(self) -> str:
        return f"<FunctorOnUniverse {self.label or '?'} ranks={list(self.ranks)}>"


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def _multiplication_action(a: TestAlgebra, r: int) -> Matrix:
    """Action of S on K^r (x) S (index i * dim S + s) by multiplication on the right factor."""
    f = a.field
    d = a.dim
    n = r * d
    cols = []
    for t in range(d):
        for i in range(r):
            e_i = f.unit_vector(r, i)
            for s in range(d):
                cols.append(kron_vector(f, e_i, a.basis_product(t, s)))
    return Matrix.from_columns(f, cols, n)


def quasicoherent_on_universe(m: FinModule, u: Universe) -> FunctorOnUniverse:
    """S |-> M (x) S with S acting on the right factor and transitions id (x) phi."""
    check_same_field(m.field, u.field)
    f = u.field
    eye = Matrix.identity(f, m.rank)
    ranks = [m.rank * a.dim for a in u.algebras]
    actions = [_multiplication_action(a, m.rank) for a in u.algebras]
    transitions = [kron(eye, mor.matrix) for mor in u.morphisms]
    label = m.label or f"K^{m.rank}"
    return FunctorOnUniverse(u, ranks, actions, transitions, label=f"qc({label})")


def zero_functor(u: Universe) -> FunctorOnUniverse:
    f = u.field
    return FunctorOnUniverse(
        u,
        [0] * len(u.algebras),
        [Matrix.zero(f, 0, 0) for _ in u.algebras],
        [Matrix.zero(f, 0, 0) for _ in u.morphisms],
        label="0",
    )


def subfunctor(F: FunctorOnUniverse, bases: Sequence[Sequence[Vector]], label: str = "") -> tuple[FunctorOnUniverse, list[Matrix]]:
    """Subfunctor spanned by ``bases[i]`` inside F(S_i), with its inclusion.

    Each basis must be linearly independent; the spans must be stable under
    the actions and the transitions, otherwise ``FunctorError`` is raised.
    Returns the subfunctor and the inclusion matrices, one per algebra.
    """
    u, f = F.universe, F.field
    incl = []
    for i, basis in enumerate(bases):
        r = F.ranks[i]
        b = Matrix.from_columns(f, list(basis), r)
        if b.cols and rank(b) != b.cols:
            raise FunctorError(f"basis at {u.label(i)} is not linearly independent")
        incl.append(b)

    def restrict(target: Matrix, big: Matrix, where: str) -> Matrix:
        cols = []
        for j in range(big.cols):
            x = solve(target, big.column(j))
            if x is None:
                raise FunctorError(f"subspace is not stable under {where}")
            cols.append(x)
        return Matrix.from_columns(f, cols, target.cols)

    ranks = [b.cols for b in incl]
    actions = []
    for i, a in enumerate(u.algebras):
        # e_s . b_j for the chosen basis b
        moved = F.actions[i] @ kron(Matrix.identity(f, a.dim), incl[i])
        actions.append(restrict(incl[i], moved, f"the action at {u.label(i)}"))
    transitions = []
    for k, m in enumerate(u.morphisms):
        moved = F.transitions[k] @ incl[m.src]
        transitions.append(restrict(incl[m.dst], moved, f"transition {k}"))
    sub = FunctorOnUniverse(u, ranks, actions, transitions, label=label or f"sub({F.label})")
    return sub, incl


def nilradical_functor(u: Universe) -> tuple[FunctorOnUniverse, list[Matrix]]:
    """S |-> nil(S), a subfunctor of S |-> S that vanishes on K.

    Its inclusion into the structure functor is a nonzero natural family
    whose component at K is zero.
    """
    o = quasicoherent_on_universe(FinModule(u.field, 1, "K"), u)
    bases = [nilradical(a) for a in u.algebras]
    logger.debug("nilradical ranks %s", [len(b) for b in bases])
    return subfunctor(o, bases, label="nil")


def restrict_functor(F: FunctorOnUniverse, sub: Universe, object_map: Sequence[int], label: str = "") -> FunctorOnUniverse:
    """F viewed on ``sub``, whose algebra i is algebra ``object_map[i]`` of F's universe.

    Every morphism of ``sub`` must appear in F's universe between the
    mapped algebras.
    """
    u = F.universe
    for i, j in enumerate(object_map):
        if sub.algebras[i] != u.algebras[j]:
            raise UniverseError(f"{sub.label(i)} does not match {u.label(j)}")
    ranks = [F.ranks[j] for j in object_map]
    actions = [F.actions[j] for j in object_map]
    transitions = [F.transition(object_map[m.src], object_map[m.dst], m.matrix) for m in sub.morphisms]
    return FunctorOnUniverse(sub, ranks, actions, transitions, label=label or F.label)


def tensor_functors(F: FunctorOnUniverse, G: FunctorOnUniverse, label: str = "") -> FunctorOnUniverse:
    """S |-> F(S) (x)_S G(S), the quotient of F(S) (x) G(S) by sm (x) n - m (x) sn.

    Each value is presented in the coordinates of a projection ``pi`` with
    kernel the relations; a section of ``pi`` carries the action and the
    transitions down.
    """
    if F.universe is not G.universe:
        raise UniverseError("tensor product of functors on different universes")
    u, f = F.universe, F.field
    projections: list[Matrix] = []
    sections: list[Matrix] = []
    for i, a in enumerate(u.algebras):
        p, q = F.ranks[i], G.ranks[i]
        relations = []
        for s in range(a.dim):
            e_s = f.unit_vector(a.dim, s)
            left, right = F.action_by(i, e_s), G.action_by(i, e_s)
            for j in range(p):
                for k in range(q):
                    lhs = kron_vector(f, left.column(j), f.unit_vector(q, k))
                    rhs = kron_vector(f, f.unit_vector(p, j), right.column(k))
                    relations.append(tuple(f.sub(x, y) for x, y in zip(lhs, rhs)))
        pi = Matrix.from_rows(f, kernel_basis(Matrix.from_rows(f, relations, p * q)), p * q)
        projections.append(pi)
        sections.append(Matrix.from_columns(f, [solve(pi, f.unit_vector(pi.rows, c)) for c in range(pi.rows)], p * q))

    ranks = [pi.rows for pi in projections]
    actions = []
    for i, a in enumerate(u.algebras):
        eye = Matrix.identity(f, G.ranks[i])
        cols = []
        for s in range(a.dim):
            moved = projections[i] @ kron(F.action_by(i, f.unit_vector(a.dim, s)), eye) @ sections[i]
            cols.extend(moved.column_list())
        actions.append(Matrix.from_columns(f, cols, ranks[i]))
    transitions = [
        projections[m.dst] @ kron(F.transitions[k], G.transitions[k]) @ sections[m.src]
        for k, m in enumerate(u.morphisms)
    ]
    logger.debug("tensor %s (x) %s: ranks %s", F.label, G.label, ranks)
    return FunctorOnUniverse(u, ranks, actions, transitions, label=label or f"{F.label} (x) {G.label}")
