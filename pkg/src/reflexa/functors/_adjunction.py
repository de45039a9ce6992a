"""Base change along K -> S and its adjunction.

For a K-algebra S, a functor F on K-algebras restricts to S-algebras
(i*F: T |-> F(T)) and a functor G on S-algebras pushes forward to
K-algebras (i_*G: R' |-> G(S (x) R')).  ``verify_adjunction`` solves both
Hom spaces and checks that the two assignments

    w   |-> phi,  phi_R' = w_{S (x) R'} o F(R' -> S (x) R')
    phi |-> w,    w_T    = G(S (x) T -> T) o phi_T

are mutually inverse.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from reflexa.algebras import (
    AlgebraMorphism,
    StructureError,
    TestAlgebra,
    base_algebra,
    tensor_algebra,
)
from reflexa.linalg import Matrix, Vector, kernel_basis, kron, solve, vstack
from reflexa.model import Verdict

from ._dual import PreconditionError, format_vector
from ._functor import FunctorOnUniverse, restrict_functor
from ._solver import NatHomSpace, nat_hom_space
from ._universe import Universe, UniverseError, UniverseMorphism

logger = logging.getLogger(__name__)


def _default_augmentation(s: TestAlgebra) -> Matrix | None:
    f = s.field
    row = Matrix.row_vector(f, f.unit_vector(s.dim, 0))
    try:
        AlgebraMorphism(s, base_algebra(f), row)
    except StructureError:
        return None
    return row


@dataclass(frozen=True)
class Comparison:
    """An S-algebra T whose S (x) T is tabulated, with the multiplication S (x) T -> T."""

    target: int
    d_index: int
    matrix: Matrix


@dataclass(frozen=True, eq=False)
class AdjunctionSetting:
    """The finite universes needed to compare Hom_S(i*F, G) with Hom_K(F, i_*G).

    Attributes
    ----------
    k_universe : Universe
        K-algebras K, S, S (x) S and S (x) S (x) S; F lives here.
    d_universe : Universe
        K-algebras K, S and S (x) S, the domain of i_*G.
    s_universe : Universe
        S-algebras S, S (x) S, S (x) S (x) S (through the left factor) and
        K (through the augmentation, when there is one); G lives here.
    d_to_u, v_to_u : list of int
        Position in ``k_universe`` of each algebra of the smaller universes.
    tensor_index : list of int
        Position in ``s_universe`` of S (x) R' for each R' of ``d_universe``.
    r_maps : list of Matrix
        The maps R' -> S (x) R', r |-> 1 (x) r.
    comparisons : list of Comparison
    """

    algebra: TestAlgebra
    augmentation: Matrix | None
    k_universe: Universe
    d_universe: Universe
    s_universe: Universe
    d_to_u: tuple[int, ...]
    v_to_u: tuple[int, ...]
    tensor_index: tuple[int, ...]
    r_maps: tuple[Matrix, ...]
    comparisons: tuple[Comparison, ...]

    @classmethod
    def for_algebra(cls, s: TestAlgebra, augmentation: Matrix | None = None) -> AdjunctionSetting:
        """Build the three universes for S.

        ``augmentation`` is a K-point S -> K as a ``1 x dim S`` matrix; by
        default the first coordinate is used when it is multiplicative.
        """
        f = s.field
        k = base_algebra(f)
        if s.dim == 1:
            if s != k:
                raise UniverseError(f"{s.name} is one-dimensional but not the base field")
            u = Universe.close(f, [k], [], name="K")
            eye = Matrix.identity(f, 1)
            return cls(s, eye, u, u, u, (0,), (0,), (0,), (eye,), (Comparison(0, 0, eye),))

        eps = _default_augmentation(s) if augmentation is None else augmentation
        if eps is not None:
            AlgebraMorphism(s, k, eps)
        d = s.dim
        ss = tensor_algebra(s, s)
        sss = tensor_algebra(s, ss)
        unit = Matrix.column_vector(f, s.unit)
        eye = Matrix.identity(f, d)
        left = kron(eye, unit)
        right = kron(unit, eye)
        left3 = kron(eye, Matrix.column_vector(f, ss.unit))
        right3 = kron(unit, Matrix.identity(f, d * d))
        mult3 = kron(s.mult, eye)

        # K-algebras R': K, S and S (x) S
        K, S, SS, SSS = 0, 1, 2, 3
        d_gens = [
            UniverseMorphism(S, SS, left),
            UniverseMorphism(S, SS, right),
            UniverseMorphism(SS, S, s.mult),
        ]
        if eps is not None:
            d_gens += [
                UniverseMorphism(S, K, eps),
                UniverseMorphism(SS, S, kron(eye, eps)),
                UniverseMorphism(SS, S, kron(eps, eye)),
            ]
        label = s.label or "S"
        d_universe = Universe.close(f, [k, s, ss], d_gens, name=f"adjunction({label})/K")
        d_to_u = (K, S, SS)
        r_maps = (unit, right, right3)

        # S-algebras: S (x) R' through the left factor, and K via the augmentation
        VS, VSS, VSSS, VK = 0, 1, 2, 3
        v_algebras = [s, ss, sss]
        structural = [eye, left, left3]
        v_to_u = [S, SS, SSS]
        if eps is not None:
            v_algebras.append(k)
            structural.append(eps)
            v_to_u.append(K)
        tensor_index = (VS, VSS, VSSS)
        v_gens = [
            UniverseMorphism(tensor_index[m.src], tensor_index[m.dst], kron(eye, m.matrix))
            for m in d_universe.morphisms
        ]
        # every S-algebra that is also an R' gets its multiplication S (x) T -> T
        comparisons = [Comparison(VS, S, s.mult), Comparison(VSS, SS, mult3)]
        if eps is not None:
            comparisons.append(Comparison(VK, K, eps))
        for c in comparisons:
            v_gens.append(UniverseMorphism(tensor_index[c.d_index], c.target, c.matrix))
        s_universe = Universe.close(
            f, v_algebras, v_gens, base=VS, structural=structural, name=f"{label}-algebras"
        )

        k_gens = list(d_universe.morphisms)
        k_gens += [UniverseMorphism(v_to_u[m.src], v_to_u[m.dst], m.matrix) for m in s_universe.morphisms]
        k_gens += [UniverseMorphism(d_to_u[i], v_to_u[tensor_index[i]], r) for i, r in enumerate(r_maps)]
        k_universe = Universe.close(f, [k, s, ss, sss], k_gens, name=f"adjunction({label})")
        logger.debug(
            "adjunction setting for %s: %d / %d / %d morphisms",
            label, len(k_universe.morphisms), len(d_universe.morphisms), len(s_universe.morphisms),
        )
        return cls(
            s, eps, k_universe, d_universe, s_universe,
            d_to_u, tuple(v_to_u), tensor_index, r_maps, tuple(comparisons),
        )


def pushforward(setting: AdjunctionSetting, G: FunctorOnUniverse) -> FunctorOnUniverse:
    """i_*G on the K-algebras of ``setting.d_universe``."""
    if G.universe is not setting.s_universe:
        raise UniverseError("G must live on the universe of S-algebras of the setting")
    f = G.field
    ranks, actions = [], []
    for i, r_map in enumerate(setting.r_maps):
        v = setting.tensor_index[i]
        ranks.append(G.ranks[v])
        actions.append(G.actions[v] @ kron(r_map, Matrix.identity(f, G.ranks[v])))
    d = setting.algebra.dim
    eye = Matrix.identity(f, d)
    transitions = [
        G.transition(setting.tensor_index[m.src], setting.tensor_index[m.dst], kron(eye, m.matrix))
        for m in setting.d_universe.morphisms
    ]
    return FunctorOnUniverse(setting.d_universe, ranks, actions, transitions, label=f"i_*{G.label}")


def _phi_of_w(setting: AdjunctionSetting, F: FunctorOnUniverse, W: NatHomSpace, w: Sequence[Any], P: NatHomSpace) -> Vector:
    comps = []
    for i, r_map in enumerate(setting.r_maps):
        v = setting.tensor_index[i]
        t = F.transition(setting.d_to_u[i], setting.v_to_u[v], r_map)
        comps.append(W.component(w, v) @ t)
    return P.vector_from_components(comps)


def _w_of_phi(setting: AdjunctionSetting, G: FunctorOnUniverse, P: NatHomSpace, phi: Sequence[Any], W: NatHomSpace) -> Vector | None:
    """w_T = G(S (x) T -> T) o phi_T at every comparison target T.

    The remaining top level S (x) S (x) S is the unique natural extension
    (the restriction to the comparison targets is injective); None when no
    natural family carries these components.
    """
    f = G.field
    explicit = {
        c.target: G.transition(setting.tensor_index[c.d_index], c.target, c.matrix) @ P.component(phi, c.d_index)
        for c in setting.comparisons
    }
    rows = [x for m in explicit.values() for x in m.entries]
    coords = solve(vstack(f, [W.restriction_matrix(t) for t in explicit], W.dim), rows)
    if coords is None:
        return None
    w = W.combine(coords)
    if any(W.component(w, t) != m for t, m in explicit.items()):
        return None
    return w


def verify_adjunction(setting: AdjunctionSetting, F: FunctorOnUniverse, G: FunctorOnUniverse) -> Verdict:
    """Check Hom_S(i*F, G) = Hom_K(F, i_*G) through the two explicit assignments."""
    if F.universe is not setting.k_universe:
        raise UniverseError("F must live on the K-universe of the setting")
    f = F.field
    W = nat_hom_space(restrict_functor(F, setting.s_universe, setting.v_to_u), G)
    P = nat_hom_space(restrict_functor(F, setting.d_universe, setting.d_to_u), pushforward(setting, G))
    details = {"dim_s_side": W.dim, "dim_k_side": P.dim}

    blocks = [W.restriction_matrix(c.target) for c in setting.comparisons]
    if W.dim and kernel_basis(vstack(f, blocks, W.dim)):
        raise PreconditionError("S-side families are not determined by their comparison components")

    for k, w in enumerate(W.basis):
        phi = _phi_of_w(setting, F, W, w, P)
        if not P.contains(phi):
            return Verdict.failed("w |-> phi is not natural", {"s_side_basis": k}, **details)
        back = _w_of_phi(setting, G, P, phi, W)
        if back is None or tuple(back) != tuple(w):
            return Verdict.failed(
                "phi |-> w does not invert w |-> phi",
                {"s_side_basis": k, "family": format_vector(f, w)},
                **details,
            )
    for k, phi in enumerate(P.basis):
        w = _w_of_phi(setting, G, P, phi, W)
        if w is None:
            return Verdict.failed("phi |-> w has no natural extension", {"k_side_basis": k}, **details)
        if tuple(_phi_of_w(setting, F, W, w, P)) != tuple(phi):
            return Verdict.failed(
                "w |-> phi does not invert phi |-> w",
                {"k_side_basis": k, "family": format_vector(f, phi)},
                **details,
            )
    return Verdict.passed("both assignments are mutually inverse", **details)
