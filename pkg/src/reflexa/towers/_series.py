"""Truncated power series and the built-in towers.

A power series to depth N is its coefficient tuple ``(c_0, ..., c_N)``,
an element of level N of the power-series tower K[x]/(x) <- K[x]/(x^2) <- ...
"""

from __future__ import annotations

import logging
import re
from collections.abc import Callable, Sequence
from typing import Any

from reflexa.algebras import polynomial_morphism, product_algebra, truncated_polynomial
from reflexa.linalg import Field, Matrix, Vector
from reflexa.modules import FinModule

from ._tower import AlgebraTower, NotAUnitError, Tower, TowerElement, TowerError

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Built-in towers
# ---------------------------------------------------------------------------

def power_series_tower(field: Field, depth: int) -> AlgebraTower:
    """Level n is K[x]/(x^(n+1)); the maps are truncations."""
    algebras = [truncated_polynomial(field, n + 1) for n in range(depth + 1)]
    maps = [
        polynomial_morphism(algebras[n + 1], algebras[n], field.unit_vector(n + 1, 1)).matrix
        for n in range(depth)
    ]
    return AlgebraTower(algebras, maps, "power-series", generator=lambda d: power_series_tower(field, d))


def product_tower(field: Field, depth: int) -> AlgebraTower:
    """Level n is K^(n+1); the maps forget the last coordinate."""
    algebras = [product_algebra(field, n + 1) for n in range(depth + 1)]
    maps = []
    for n in range(depth):
        cols = [field.unit_vector(n + 1, i) for i in range(n + 1)] + [field.zero_vector(n + 1)]
        maps.append(Matrix.from_columns(field, cols, n + 1))
    return AlgebraTower(algebras, maps, "product", generator=lambda d: product_tower(field, d))


def constant_tower(field: Field, depth: int, rank: int = 1) -> Tower:
    return Tower.constant(FinModule(field, rank), depth)


TOWER_GENERATORS: dict[str, Callable[[Field, int], Tower]] = {
    "power-series": power_series_tower,
    "constant": constant_tower,
    "product": product_tower,
}

_NAME_RE = re.compile(r"^(?P<name>[a-z-]+)(?::(?P<depth>\d+))?$")


def builtin_tower(spec: str, field: Field, depth: int | None = None) -> Tower:
    """Resolve ``"power-series:6"`` style names; an explicit ``depth`` wins."""
    m = _NAME_RE.match(spec.strip())
    if not m or m.group("name") not in TOWER_GENERATORS:
        known = ", ".join(sorted(TOWER_GENERATORS))
        raise TowerError(f"unknown tower {spec!r} (known: {known})")
    if depth is None:
        depth = int(m.group("depth")) if m.group("depth") else 4
    return TOWER_GENERATORS[m.group("name")](field, depth)


# ---------------------------------------------------------------------------
# Power series arithmetic
# ---------------------------------------------------------------------------

def ps_truncate(field: Field, a: Sequence[Any], depth: int) -> Vector:
    """Coefficients up to x^depth, padding with zeros."""
    coeffs = list(field.vector(a[: depth + 1]))
    return tuple(coeffs + [field.zero] * (depth + 1 - len(coeffs)))


def ps_mul(field: Field, a: Sequence[Any], b: Sequence[Any], depth: int | None = None) -> Vector:
    """Truncated convolution; ``depth`` defaults to the shorter input."""
    if depth is None:
        depth = min(len(a), len(b)) - 1
    a = ps_truncate(field, a, depth)
    b = ps_truncate(field, b, depth)
    return tuple(
        field.reduce(sum(a[k] * b[n - k] for k in range(n + 1)))
        for n in range(depth + 1)
    )


def ps_invert(field: Field, u: Sequence[Any], depth: int) -> Vector:
    """Inverse of a unit to depth ``depth`` by Newton iteration v <- v (2 - u v)."""
    u = ps_truncate(field, u, depth)
    if field.is_zero(u[0]):
        raise NotAUnitError("constant term is zero; the series is not invertible")
    v: Vector = (field.inv(u[0]),)
    prec = 1
    while prec < depth + 1:
        prec = min(2 * prec, depth + 1)
        uv = ps_mul(field, u, v, prec - 1)
        two_minus = tuple(field.sub(2 if k == 0 else 0, c) for k, c in enumerate(uv))
        v = ps_mul(field, v, two_minus, prec - 1)
    logger.debug("inverted a series to depth %d", depth)
    return ps_truncate(field, v, depth)


def ps_element(tower: Tower, a: Sequence[Any]) -> TowerElement:
    """A series as a compatible element of the power-series tower."""
    return TowerElement.from_top(tower, ps_truncate(tower.field, a, tower.depth))
