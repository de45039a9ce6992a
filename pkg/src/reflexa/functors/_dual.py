"""Dual functors, reflexivity and D-proquasi-coherence on a universe.

The dual of F is realized through M*(S) = Hom(F, qc(S)), the natural
families from F into the quasi-coherent module of S viewed as a K-module.
S acts on the target factor by left multiplication and a morphism
S -> S' acts by post-composition with phi (x) id.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from reflexa.errors import ReflexaError
from reflexa.linalg import (
    Field,
    Matrix,
    Vector,
    image_basis,
    kernel_basis,
    kron,
    solve,
)
from reflexa.model import Verdict
from reflexa.modules import FinModule, LinearMap

from ._functor import FunctorError, FunctorOnUniverse, quasicoherent_on_universe
from ._solver import NatHomSpace, nat_hom_space
from ._universe import UniverseError

logger = logging.getLogger(__name__)


class PreconditionError(ReflexaError):
    """An operation was called on input that does not meet its precondition."""


def format_vector(field: Field, v: Sequence[Any]) -> list[str]:
    return [field.format(x) for x in v]


def _coordinates(space: NatHomSpace, vector: Vector) -> Vector:
    if not space.contains(vector):
        raise FunctorError(f"computed family is not natural in {space!r}")
    return space.coordinates(vector)


def _family_witness(space: NatHomSpace, vector: Sequence[Any]) -> dict[str, Any]:
    u = space.universe
    return {u.label(i): c.to_dict() for i, c in enumerate(space.components(vector))}


# ---------------------------------------------------------------------------
# Dual functor
# ---------------------------------------------------------------------------

class DualFunctor(FunctorOnUniverse):
    """F* on the universe of F, keeping the solved spaces Hom(F, qc(S))."""

    def __init__(self, source: FunctorOnUniverse, spaces: Sequence[NatHomSpace],
                 actions: Sequence[Matrix], transitions: Sequence[Matrix]) -> None:
        self.source = source
        self.spaces = tuple(spaces)
        super().__init__(
            source.universe,
            [s.dim for s in self.spaces],
            actions,
            transitions,
            label=f"{source.label}*",
        )


def dual_on_universe(F: FunctorOnUniverse) -> DualFunctor:
    """F* with (F*)(S) = Hom(F, qc(S)) and its S-module structure."""
    u, f = F.universe, F.field
    if u.base_algebra.dim != 1:
        raise UniverseError("dual functors are defined on universes of K-algebras")
    targets = [quasicoherent_on_universe(FinModule(f, a.dim, u.label(i)), u) for i, a in enumerate(u.algebras)]
    spaces = [nat_hom_space(F, t) for t in targets]
    dims = [a.dim for a in u.algebras]
    eyes = [Matrix.identity(f, d) for d in dims]

    actions = []
    for i, a in enumerate(u.algebras):
        space = spaces[i]
        cols = []
        for s in range(a.dim):
            left = a.left_multiplication(f.unit_vector(a.dim, s))
            for k in range(space.dim):
                comps = [kron(left, eyes[t]) @ c for t, c in enumerate(space.family(k))]
                cols.append(_coordinates(space, space.vector_from_components(comps)))
        actions.append(Matrix.from_columns(f, cols, space.dim))

    transitions = []
    for m in u.morphisms:
        src, dst = spaces[m.src], spaces[m.dst]
        cols = []
        for k in range(src.dim):
            comps = [kron(m.matrix, eyes[t]) @ c for t, c in enumerate(src.family(k))]
            cols.append(_coordinates(dst, dst.vector_from_components(comps)))
        transitions.append(Matrix.from_columns(f, cols, dst.dim))

    logger.debug("dual of %s: ranks %s", F.label, [s.dim for s in spaces])
    return DualFunctor(F, spaces, actions, transitions)


def _swap(v: Sequence[Any], outer: int, inner: int) -> Vector:
    """Coordinates in B (x) A of a vector of A (x) B, dim A = outer, dim B = inner."""
    return tuple(v[a * inner + b] for b in range(inner) for a in range(outer))


def double_dual_unit_on_universe(F: FunctorOnUniverse) -> tuple[DualFunctor, list[Matrix]]:
    """F** and the components of the unit F -> F**.

    eta_S(m) is the family whose component at T sends w in F*(T) to the
    swap of w_S(m) from T (x) S into S (x) T.
    """
    u, f = F.universe, F.field
    Fs = dual_on_universe(F)
    Fss = dual_on_universe(Fs)
    units = []
    for i, s_alg in enumerate(u.algebras):
        dS = s_alg.dim
        space = Fss.spaces[i]
        cols = []
        for j in range(F.ranks[i]):
            comps = []
            for t, t_alg in enumerate(u.algebras):
                dT = t_alg.dim
                cols_t = []
                for k in range(Fs.ranks[t]):
                    w_s = Fs.spaces[t].component(Fs.spaces[t].basis[k], i)
                    cols_t.append(_swap(w_s.column(j), dT, dS))
                comps.append(Matrix.from_columns(f, cols_t, dS * dT))
            cols.append(_coordinates(space, space.vector_from_components(comps)))
        units.append(Matrix.from_columns(f, cols, Fss.ranks[i]))
    return Fss, units


def check_reflexive(F: FunctorOnUniverse) -> Verdict:
    """Is the unit F -> F** bijective at every algebra of the universe?"""
    u, f = F.universe, F.field
    Fss, units = double_dual_unit_on_universe(F)
    for i, eta in enumerate(units):
        kernel = kernel_basis(eta)
        if kernel:
            return Verdict.failed(
                f"unit F -> F** is not injective at {u.label(i)}",
                {"algebra": u.label(i), "kind": "kernel", "vector": format_vector(f, kernel[0])},
            )
        if eta.rows != eta.cols:
            image = image_basis(eta)
            for e in range(eta.rows):
                target = f.unit_vector(eta.rows, e)
                if not image or solve(Matrix.from_columns(f, image, eta.rows), target) is None:
                    return Verdict.failed(
                        f"unit F -> F** is not surjective at {u.label(i)}",
                        {"algebra": u.label(i), "kind": "cokernel", "vector": format_vector(f, target)},
                    )
    return Verdict.passed(
        "F -> F** is bijective on the universe",
        ranks=list(F.ranks),
        double_dual_ranks=list(Fss.ranks),
    )


# ---------------------------------------------------------------------------
# D-proquasi-coherence and image factorization
# ---------------------------------------------------------------------------

def check_d_proquasicoherent(F: FunctorOnUniverse, rank_bound: int = 4) -> Verdict:
    """Is restriction Hom(F, qc(N)) -> Hom_K(F(K), N) injective for rank N <= bound?"""
    u, f = F.universe, F.field
    if u.base_algebra.dim != 1:
        raise UniverseError("D-proquasi-coherence is checked on universes of K-algebras")
    for r in range(1, rank_bound + 1):
        space = nat_hom_space(F, quasicoherent_on_universe(FinModule(f, r), u))
        kernel = space.restriction_kernel()
        if kernel:
            family = space.combine(kernel[0])
            return Verdict.failed(
                f"a nonzero natural family into qc(K^{r}) vanishes at {u.label(u.base)}",
                {"target_rank": r, "components": _family_witness(space, family)},
                rank_bound=rank_bound,
            )
    return Verdict.passed("restriction to the base is injective", rank_bound=rank_bound)


@dataclass(frozen=True)
class Factorization:
    """f = mono o epi through the quasi-coherent module on the image of f_K."""

    image: FinModule
    mono: LinearMap
    epi_space: NatHomSpace
    epi: Vector
    unique: bool


def factor_through_image(space: NatHomSpace, family: Sequence[Any], rank_bound: int = 4) -> Factorization:
    """Factor a natural family F -> qc(N) through qc(image of f_K).

    ``space`` must be ``nat_hom_space(F, quasicoherent_on_universe(N, u))``
    and F must pass ``check_d_proquasicoherent``.
    """
    F = space.source
    u, f = F.universe, F.field
    if not space.contains(family):
        raise PreconditionError("the given family is not natural")
    verdict = check_d_proquasicoherent(F, rank_bound)
    if not verdict.ok:
        raise PreconditionError(f"{F.label} is not D-proquasi-coherent: {verdict.message}")

    n = space.target.ranks[u.base]
    f_k = space.component(family, u.base)
    basis = image_basis(f_k)
    b = Matrix.from_columns(f, basis, n)
    image = FinModule(f, len(basis), "image")
    target = FinModule(f, n)

    comps = []
    for t, alg in enumerate(u.algebras):
        mono_t = kron(b, Matrix.identity(f, alg.dim))
        f_t = space.component(family, t)
        cols = []
        for j in range(f_t.cols):
            x = solve(mono_t, f_t.column(j))
            if x is None:
                raise PreconditionError(f"family does not factor through the image at {u.label(t)}")
            cols.append(x)
        comps.append(Matrix.from_columns(f, cols, mono_t.cols))

    epi_space = nat_hom_space(F, quasicoherent_on_universe(image, u))
    epi = epi_space.vector_from_components(comps)
    if not epi_space.contains(epi):
        raise PreconditionError("the induced map onto the image is not natural")

    # any e with (b e)_K = f_K equals epi when the map e |-> (b e)_K is injective
    flat = [tuple((b @ epi_space.component(v, u.base)).entries) for v in epi_space.basis]
    m = Matrix.from_columns(f, flat, n * F.ranks[u.base])
    unique = not kernel_basis(m)
    if unique:
        coords = solve(m, f_k.entries)
        unique = coords is not None and tuple(coords) == epi_space.coordinates(epi)
    logger.debug("image factorization: rank %d, unique=%s", len(basis), unique)
    return Factorization(image, LinearMap(image, target, b), epi_space, epi, unique)
