"""Solving for natural families of S-linear maps.

A family (f_S) from F to G is laid out as one vector: the blocks f_S
(shape ``rank G(S) x rank F(S)``, row-major) one after another in the
order of the universe's algebras.  S-linearity and every naturality
square contribute linear equations to a single ``LinearSystem``; its
kernel is the space of natural transformations on the universe.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from typing import Any

from reflexa.linalg import (
    Field,
    LinearSystem,
    Matrix,
    Vector,
    kernel_basis,
    linear_combination,
)

from ._functor import FunctorOnUniverse
from ._universe import Universe, UniverseError, enlarge_universe

logger = logging.getLogger(__name__)


class NatHomSpace:
    """The solved space of natural families F -> G on a universe."""

    def __init__(self, source: FunctorOnUniverse, target: FunctorOnUniverse, system: LinearSystem, offsets: list[int]) -> None:
        self.source = source
        self.target = target
        self.universe = source.universe
        self.field: Field = source.field
        self.system = system
        self.offsets = offsets
        self.basis: list[Vector] = system.kernel_basis()

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def unknowns(self) -> int:
        return self.system.unknowns

    def block_shape(self, i: int) -> tuple[int, int]:
        return (self.target.ranks[i], self.source.ranks[i])

    def component(self, vector: Sequence[Any], i: int) -> Matrix:
        """f_S for the algebra at index ``i``."""
        rows, cols = self.block_shape(i)
        start = self.offsets[i]
        return Matrix._raw(self.field, rows, cols, tuple(vector[start:start + rows * cols]))

    def components(self, vector: Sequence[Any]) -> list[Matrix]:
        return [self.component(vector, i) for i in range(len(self.universe))]

    def family(self, k: int) -> list[Matrix]:
        return self.components(self.basis[k])

    def vector_from_components(self, components: Sequence[Matrix]) -> Vector:
        out: list[Any] = []
        for i, c in enumerate(components):
            if c.shape != self.block_shape(i):
                raise UniverseError(f"component {i} has shape {c.shape}, expected {self.block_shape(i)}")
            out.extend(c.entries)
        return tuple(out)

    def contains(self, vector: Sequence[Any]) -> bool:
        return self.system.contains(vector)

    def coordinates(self, vector: Sequence[Any]) -> Vector:
        """Coordinates in ``basis`` of a vector known to lie in the space."""
        return self.system.coordinates(vector)

    def combine(self, coords: Sequence[Any]) -> Vector:
        return linear_combination(self.field, coords, self.basis, self.unknowns)

    def restriction_matrix(self, i: int | None = None) -> Matrix:
        """Linear map from the space to the flattened component at algebra ``i`` (default: base)."""
        i = self.universe.base if i is None else i
        rows, cols = self.block_shape(i)
        start = self.offsets[i]
        columns = [v[start:start + rows * cols] for v in self.basis]
        return Matrix.from_columns(self.field, columns, rows * cols)

    def restriction_kernel(self, i: int | None = None) -> list[Vector]:
        """Coordinates of the families whose component at ``i`` vanishes."""
        return kernel_basis(self.restriction_matrix(i))

    def restriction_is_injective(self, i: int | None = None) -> bool:
        return not self.restriction_kernel(i)

    def __repr__(self) -> str:
        return f"<NatHomSpace {self.source.label} -> {self.target.label}: dim {self.dim}>"


def nat_hom_space(F: FunctorOnUniverse, G: FunctorOnUniverse) -> NatHomSpace:
    """All natural families of S-linear maps F(S) -> G(S) on the shared universe."""
    if F.universe is not G.universe:
        raise UniverseError("functors live on different universes")
    u = F.universe
    field = u.field
    offsets = []
    total = 0
    for i in range(len(u)):
        offsets.append(total)
        total += F.ranks[i] * G.ranks[i]
    system = LinearSystem(field, total)

    def var(i: int, a: int, b: int) -> int:
        return offsets[i] + a * F.ranks[i] + b

    # f_S(e_s . m_j) = e_s . f_S(m_j)
    for i, alg in enumerate(u.algebras):
        rF, rG = F.ranks[i], G.ranks[i]
        actF, actG = F.actions[i], G.actions[i]
        for s in range(alg.dim):
            for j in range(rF):
                col = s * rF + j
                for a in range(rG):
                    eq: dict[int, Any] = {}
                    for b in range(rF):
                        c = actF[b, col]
                        if c:
                            k = var(i, a, b)
                            eq[k] = eq.get(k, 0) + c
                    for c_ in range(rG):
                        c = actG[a, s * rG + c_]
                        if c:
                            k = var(i, c_, j)
                            eq[k] = eq.get(k, 0) - c
                    if eq:
                        system.add_equation(eq)

    # t^G_phi f_S = f_S' t^F_phi
    for k_m in u.non_identity_morphisms():
        m = u.morphisms[k_m]
        tF, tG = F.transitions[k_m], G.transitions[k_m]
        i, i2 = m.src, m.dst
        for a in range(G.ranks[i2]):
            for j in range(F.ranks[i]):
                eq = {}
                for c_ in range(G.ranks[i]):
                    c = tG[a, c_]
                    if c:
                        k = var(i, c_, j)
                        eq[k] = eq.get(k, 0) + c
                for b in range(F.ranks[i2]):
                    c = tF[b, j]
                    if c:
                        k = var(i2, a, b)
                        eq[k] = eq.get(k, 0) - c
                if eq:
                    system.add_equation(eq)

    space = NatHomSpace(F, G, system, offsets)
    logger.debug("Hom(%s, %s): %d unknowns, dim %d", F.label, G.label, total, space.dim)
    return space


def compose_families(
    outer: NatHomSpace,
    g: Sequence[Any],
    inner: NatHomSpace,
    f: Sequence[Any],
    result: NatHomSpace,
) -> Vector:
    """The family g o f laid out in ``result`` (a space F -> H)."""
    comps = [outer.component(g, i) @ inner.component(f, i) for i in range(len(inner.universe))]
    return result.vector_from_components(comps)


def solve_until_stable(
    build: Callable[[Universe], tuple[FunctorOnUniverse, FunctorOnUniverse]],
    universe: Universe,
    max_rounds: int = 6,
) -> tuple[NatHomSpace, Universe, list[int]]:
    """Re-solve on enlarged universes until the dimension repeats twice.

    ``build`` constructs the source and target functors on a given
    universe.  Returns the last space, its universe and the dimension
    history.  Stabilization is a heuristic, not a proof that the space
    is the true one.
    """
    history: list[int] = []
    u = universe
    space = nat_hom_space(*build(u))
    history.append(space.dim)
    for _ in range(max_rounds):
        if len(history) >= 3 and history[-1] == history[-2] == history[-3]:
            break
        u = enlarge_universe(u)
        space = nat_hom_space(*build(u))
        history.append(space.dim)
        logger.info("universe %s: dimension %d", u.name, space.dim)
    return space, u, history
