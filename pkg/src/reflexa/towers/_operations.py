"""Stabilization, product decomposition, duality and kernels of towers."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from reflexa.algebras import tensor_algebra
from reflexa.linalg import (
    Field,
    Matrix,
    Vector,
    check_same_field,
    hstack,
    kernel_basis,
    kron,
    rank,
    solve,
    span_basis,
)
from reflexa.model import Verdict
from reflexa.modules import FinModule, double_dual_unit, dual_module

from ._tower import (
    AlgebraTower,
    DirectSystem,
    NonSurjectiveError,
    Tower,
    TowerElement,
    TowerError,
    TowerFunctional,
)

logger = logging.getLogger(__name__)


def _require_surjective(t: Tower, what: str) -> None:
    n = t.first_non_surjective()
    if n is not None:
        raise NonSurjectiveError(f"{what}: map {n} (level {n + 1} -> level {n}) is not surjective")


def _restrict(m: Matrix, source: list[Vector], target: list[Vector], rows: int) -> Matrix:
    """Matrix of ``m`` from span(source) to span(target), in those bases."""
    f = m.field
    b = Matrix.from_columns(f, target, rows)
    cols = []
    for v in source:
        x = solve(b, m.apply(v))
        if x is None:
            raise TowerError("image of a level does not map into the image below")
        cols.append(x)
    return Matrix.from_columns(f, cols, len(target))


def _image_bases(t: Tower, top: int) -> list[list[Vector]]:
    f = t.field
    return [span_basis(f, t.levels[n].rank, t.composite(top, n).column_list()) for n in range(top + 1)]


# ---------------------------------------------------------------------------
# Mittag-Leffler stabilization
# ---------------------------------------------------------------------------

def stabilized_images(t: Tower, depth: int | None = None) -> Tower:
    """Replace every level by its image from the deepest level.

    With ``depth`` the tower is first deepened through its generator.
    Images use the canonical (rref) basis, so a tower whose maps are
    already surjective is returned unchanged.  The result deepens by
    stabilizing the deeper original; that raises ``TowerError`` when the
    images of the materialized levels are still shrinking.
    """
    if depth is not None:
        t = t.deepen(depth)
    f = t.field
    top = t.depth
    bases = _image_bases(t, top)
    stable = None
    if top > 0:
        previous = _image_bases(t, top - 1)
        stable = all(len(previous[n]) == len(bases[n]) for n in range(top))
    levels = [FinModule(f, len(b), lv.label) for b, lv in zip(bases, t.levels)]
    maps = [_restrict(t.maps[n], bases[n + 1], bases[n], t.levels[n].rank) for n in range(top)]
    generator = t.generator
    restabilize = None if generator is None else (lambda d: stabilized_images(generator(d)))
    logger.debug("stabilized %s at depth %d: dims %s -> %s", t.name or "tower", top, t.dims, [lv.rank for lv in levels])
    return Tower(f, levels, maps, t.name, restabilize, prefix_stable=stable)


# ---------------------------------------------------------------------------
# Product decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProductDecomposition:
    """Level k = H_0 (+) ... (+) H_k with the tower maps becoming truncations.

    ``kernels[n]`` is a basis of H_n = ker(level n -> level n-1) (H_0 is
    level 0), ``sections[n]`` is the chosen section of map n and
    ``isomorphisms[k]`` has as columns the images of the H-bases at level k.
    """

    tower: Tower
    kernels: tuple[tuple[Vector, ...], ...]
    sections: tuple[Matrix, ...]
    isomorphisms: tuple[Matrix, ...]

    @property
    def dims(self) -> list[int]:
        return [len(k) for k in self.kernels]

    @property
    def modules(self) -> list[FinModule]:
        f = self.tower.field
        return [FinModule(f, len(k), f"H{n}") for n, k in enumerate(self.kernels)]


def _section(m: Matrix) -> Matrix:
    """Right inverse of a surjection, supported on the pivot columns of its rref."""
    f = m.field
    cols = []
    for i in range(m.rows):
        x = solve(m, f.unit_vector(m.rows, i))
        if x is None:
            raise NonSurjectiveError("map is not surjective")
        cols.append(x)
    return Matrix.from_columns(f, cols, m.cols)


def product_decomposition(t: Tower) -> ProductDecomposition:
    """Split a surjective tower into the kernels of its connecting maps."""
    _require_surjective(t, "product decomposition")
    f = t.field
    kernels = [tuple(f.unit_vector(t.levels[0].rank, i) for i in range(t.levels[0].rank))]
    sections = []
    isos = [Matrix.identity(f, t.levels[0].rank)]
    for n, m in enumerate(t.maps):
        h = tuple(kernel_basis(m))
        s = _section(m)
        d = t.levels[n + 1].rank
        iso = hstack(f, [s @ isos[-1], Matrix.from_columns(f, list(h), d)], d)
        if sum(len(k) for k in kernels) + len(h) != d or rank(iso) != d:
            raise TowerError(f"level {n + 1} is not the sum of the kernels below it")
        truncation = hstack(f, [isos[-1], Matrix.zero(f, m.rows, len(h))], m.rows)
        if m @ iso != truncation:
            raise TowerError(f"map {n} is not a truncation in the split coordinates")
        kernels.append(h)
        sections.append(s)
        isos.append(iso)
    logger.debug("product decomposition dims %s", [len(k) for k in kernels])
    return ProductDecomposition(t, tuple(kernels), tuple(sections), tuple(isos))


# ---------------------------------------------------------------------------
# Duality
# ---------------------------------------------------------------------------

def dual_tower(t: Tower) -> DirectSystem:
    """The direct system of duals of a surjective tower."""
    _require_surjective(t, "dual tower")
    return DirectSystem(t.field, [dual_module(lv) for lv in t.levels], [m.transpose() for m in t.maps])


def reflexivity_roundtrip(t: Tower) -> Verdict:
    """Dualize the stabilized tower twice and compare levelwise through the double-dual units."""
    s = stabilized_images(t)
    back = dual_tower(s).dual()
    for n, lv in enumerate(s.levels):
        unit = double_dual_unit(lv).matrix
        if back.levels[n].rank != lv.rank or not unit.is_identity():
            return Verdict.failed(f"level {n} changes under double dualization", {"level": n})
    for n, m in enumerate(s.maps):
        lhs = back.maps[n] @ double_dual_unit(s.levels[n + 1]).matrix
        rhs = double_dual_unit(s.levels[n]).matrix @ m
        if lhs != rhs:
            return Verdict.failed(f"map {n} changes under double dualization", {"level": n})
    return Verdict.passed(
        "tower equals its double dual levelwise",
        depth=s.depth,
        dims=s.dims,
        prefix_stable=s.prefix_stable,
    )


# ---------------------------------------------------------------------------
# Kernel of a functional
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KernelSplitting:
    """lim V = Ker f (+) K.v, realized by the quotient tower V_n / <v_n>.

    ``quotients[n]`` maps level n onto the quotient level n;
    ``kernel_bases[n]`` spans ker f_n (for levels where f is defined) and
    ``kernel_to_quotient[n]`` is the restriction of the quotient map to it.
    """

    quotient: Tower
    element: TowerElement
    quotients: tuple[Matrix, ...]
    kernel_bases: tuple[tuple[Vector, ...] | None, ...]
    kernel_to_quotient: tuple[Matrix | None, ...]


def _quotient_by(v: Vector, n: int, field: Field) -> tuple[Matrix, Matrix]:
    """Quotient map K^n -> K^n / <v> dropping the first nonzero coordinate of v, and its section."""
    c = next((i for i, x in enumerate(v) if x), None)
    if c is None:
        eye = Matrix.identity(field, n)
        return eye, eye
    inv = field.inv(v[c])
    rows = []
    for i in range(n):
        if i == c:
            continue
        # x_i - (x_c / v_c) v_i
        row = [field.zero] * n
        row[i] = field.one
        row[c] = field.sub(row[c], field.mul(inv, v[i]))
        rows.append(row)
    q = Matrix.from_rows(field, rows, n)
    keep = [i for i in range(n) if i != c]
    section = Matrix.from_columns(field, [field.unit_vector(n, i) for i in keep], n)
    return q, section


def kernel_tower(f: TowerFunctional, t: Tower | None = None) -> tuple[Tower, KernelSplitting | None]:
    """Quotient tower V_n / <v_n> for an element v with f(v) = 1.

    Returns ``t`` itself and no splitting when f is zero.
    """
    t = f.tower if t is None else t
    if t != f.tower:
        raise TowerError("functional belongs to a different tower")
    if f.is_zero():
        return t, None
    _require_surjective(t, "kernel tower")
    fld = t.field
    top = t.depth
    row = f.at(top)
    c = next(i for i, x in enumerate(row) if x)
    top_vector = tuple(fld.inv(row[c]) if i == c else fld.zero for i in range(len(row)))
    v = TowerElement.from_top(t, top_vector)

    quotients, sections = [], []
    for n, lv in enumerate(t.levels):
        q, s = _quotient_by(v.level(n), lv.rank, fld)
        quotients.append(q)
        sections.append(s)
    maps = [quotients[n] @ t.maps[n] @ sections[n + 1] for n in range(top)]
    quotient = Tower(fld, [FinModule(fld, q.rows) for q in quotients], maps, f"{t.name}/v" if t.name else "")

    kernel_bases: list[tuple[Vector, ...] | None] = []
    restricted: list[Matrix | None] = []
    for n, lv in enumerate(t.levels):
        if n < f.start:
            kernel_bases.append(None)
            restricted.append(None)
            continue
        fn = f.at(n)
        if fld.dot(fn, v.level(n)) != fld.one:
            raise TowerError(f"f(v) != 1 at level {n}")
        kb = tuple(kernel_basis(Matrix.row_vector(fld, fn)))
        r = quotients[n] @ Matrix.from_columns(fld, list(kb), lv.rank)
        if len(kb) != lv.rank - 1 or rank(r) != len(kb):
            raise TowerError(f"level {n} is not ker f (+) K.v")
        kernel_bases.append(kb)
        restricted.append(r)
    logger.debug("kernel tower dims %s", quotient.dims)
    return quotient, KernelSplitting(quotient, v, tuple(quotients), tuple(kernel_bases), tuple(restricted))


# ---------------------------------------------------------------------------
# Completed tensor product
# ---------------------------------------------------------------------------

def completed_tensor(a: AlgebraTower, b: AlgebraTower) -> AlgebraTower:
    """Level n is A_n (x) B_n: the diagonal of the doubly indexed system."""
    check_same_field(a.field, b.field)
    depth = min(a.depth, b.depth)
    algebras = [tensor_algebra(a.algebras[n], b.algebras[n]) for n in range(depth + 1)]
    maps = [kron(a.maps[n], b.maps[n]) for n in range(depth)]
    name = f"{a.name}(x){b.name}" if a.name and b.name else ""
    generator = None
    if a.generator is not None and b.generator is not None:
        ga, gb = a.generator, b.generator

        def generator(d: int) -> AlgebraTower:
            ta, tb = ga(d), gb(d)
            assert isinstance(ta, AlgebraTower) and isinstance(tb, AlgebraTower)
            return completed_tensor(ta, tb)

    return AlgebraTower(algebras, maps, name, generator)
