"""Dual, double dual, tensor and Hom at finite rank.

Index conventions (shared by every package):

- ``tensor(m, n)``: e_i (x) e_j sits at ``i * rank(n) + j``.
- ``hom_module(m, n)``: the coordinate at ``i * rank(n) + j`` is the
  matrix entry ``(j, i)``, i.e. the j-th component of f(e_i).
- dual modules use the dual basis of the standard basis.

With these choices ``tensor_to_hom``, ``hom_from_dual_source`` and
``double_dual_unit`` are all identity matrices.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import Any

from reflexa.linalg import (
    DimensionError,
    Matrix,
    Vector,
    check_same_field,
    kron,
)

from ._module import FinModule, LinearMap


def _tag(prefix: str, m: FinModule) -> str:
    return f"{prefix}({m.label})" if m.label else ""


# ---------------------------------------------------------------------------
# Dual
# ---------------------------------------------------------------------------

def dual_module(m: FinModule) -> FinModule:
    """M* = Hom(M, K), same rank, dual basis."""
    return FinModule(m.field, m.rank, _tag("dual", m))


def dual_map(f: LinearMap) -> LinearMap:
    """f*: N* -> M*, the transpose."""
    return LinearMap(dual_module(f.codomain), dual_module(f.domain), f.matrix.transpose())


def double_dual_unit(m: FinModule) -> LinearMap:
    """The canonical map M -> M**, v |-> (w |-> w(v))."""
    return LinearMap(m, dual_module(dual_module(m)), Matrix.identity(m.field, m.rank))


# ---------------------------------------------------------------------------
# Tensor
# ---------------------------------------------------------------------------

def tensor(m: FinModule, n: FinModule) -> FinModule:
    field = check_same_field(m.field, n.field)
    label = f"{m.label}*{n.label}" if m.label and n.label else ""
    return FinModule(field, m.rank * n.rank, label)


def tensor_map(f: LinearMap, g: LinearMap) -> LinearMap:
    return LinearMap(tensor(f.domain, g.domain), tensor(f.codomain, g.codomain), kron(f.matrix, g.matrix))


def evaluation(m: FinModule) -> LinearMap:
    """M* (x) M -> K, w (x) v |-> w(v)."""
    n = m.rank
    f = m.field
    entries = [f.zero] * (n * n)
    for i in range(n):
        entries[i * n + i] = f.one
    return LinearMap(tensor(dual_module(m), m), FinModule(f, 1), Matrix._raw(f, 1, n * n, tuple(entries)))


def coevaluation(m: FinModule) -> LinearMap:
    """K -> M (x) M*, 1 |-> sum e_i (x) e_i*."""
    ev = evaluation(m)
    return LinearMap(FinModule(m.field, 1), tensor(m, dual_module(m)), ev.matrix.transpose())


def snake_identity(m: FinModule) -> bool:
    """Both zig-zag composites through ev and coev are identities."""
    f, n = m.field, m.rank
    one = Matrix.identity(f, n)
    ev = evaluation(m).matrix
    coev = coevaluation(m).matrix
    left = kron(one, ev) @ kron(coev, one)
    right = kron(ev, one) @ kron(one, coev)
    return left.is_identity() and right.is_identity()


# ---------------------------------------------------------------------------
# Hom
# ---------------------------------------------------------------------------

def hom_module(m: FinModule, n: FinModule) -> FinModule:
    field = check_same_field(m.field, n.field)
    label = f"Hom({m.label},{n.label})" if m.label and n.label else ""
    return FinModule(field, m.rank * n.rank, label)


def map_to_hom_element(f: LinearMap) -> Vector:
    """Coordinates of ``f`` in ``hom_module(f.domain, f.codomain)``."""
    a, b = f.domain.rank, f.codomain.rank
    return tuple(f.matrix[j, i] for i in range(a) for j in range(b))


def hom_element_to_map(m: FinModule, n: FinModule, x: Sequence[Any]) -> LinearMap:
    a, b = m.rank, n.rank
    if len(x) != a * b:
        raise DimensionError(f"Hom({a}, {b}) element needs {a * b} coordinates, got {len(x)}")
    field = check_same_field(m.field, n.field)
    x = field.vector(x)
    data = tuple(x[i * b + j] for j in range(b) for i in range(a))
    return LinearMap(m, n, Matrix._raw(field, b, a, data))


def tensor_to_hom(m: FinModule, n: FinModule) -> LinearMap:
    """M* (x) N -> Hom(M, N), w (x) v |-> (u |-> w(u) v)."""
    src = tensor(dual_module(m), n)
    return LinearMap(src, hom_module(m, n), Matrix.identity(src.field, src.rank))


def hom_to_tensor(m: FinModule, n: FinModule) -> LinearMap:
    dst = tensor(dual_module(m), n)
    return LinearMap(hom_module(m, n), dst, Matrix.identity(dst.field, dst.rank))


def hom_from_dual_source(m: FinModule, n: FinModule) -> LinearMap:
    """M (x) N -> Hom(M*, N), v (x) v' |-> (w |-> w(v) v')."""
    src = tensor(m, n)
    return LinearMap(src, hom_module(dual_module(m), n), Matrix.identity(src.field, src.rank))


def hom_from_product(index_count: int, n: FinModule) -> LinearMap:
    """Hom((K^I)*, N) -> N^I for a finite index set I.

    A map on the dual of the product is determined by its values on the
    coordinate functionals, one copy of N per index.
    """
    src = hom_module(dual_module(FinModule(n.field, index_count)), n)
    dst = FinModule(n.field, index_count * n.rank)
    return LinearMap(src, dst, Matrix.identity(n.field, src.rank))
