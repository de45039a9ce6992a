"""Inverse systems indexed by the natural numbers, as finite prefixes.

A tower is the prefix ``level 0 <- level 1 <- ... <- level L`` of an
inverse system of finite-rank modules; ``maps[n]`` goes from level n+1 to
level n.  The inverse limit itself is never materialized: an element is
a compatible list of coordinate vectors, one per level.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from typing import Any

from reflexa.algebras import AlgebraMorphism, FinAlgebra
from reflexa.errors import ReflexaError
from reflexa.linalg import (
    Field,
    Matrix,
    Vector,
    check_same_field,
    rank,
    vector_add,
    vector_scale,
)
from reflexa.modules import FinModule, LinearMap, dual_module


class TowerError(ReflexaError):
    """A tower, element or functional is malformed."""


class NonSurjectiveError(TowerError):
    """An operation needing surjective connecting maps met one that is not."""


class InconsistentFunctionalError(TowerError):
    """Levelwise functionals are not compatible with the connecting maps."""


class NotAUnitError(TowerError):
    """A power series without invertible constant term was inverted."""


TowerGenerator = Callable[[int], "Tower"]
"""Builds the same tower materialized to the given depth."""


# ---------------------------------------------------------------------------
# Tower
# ---------------------------------------------------------------------------

class Tower:
    """A finite prefix of an inverse system of modules.

    Parameters
    ----------
    field : Field
    levels : sequence of FinModule
        level 0 first; at least one level.
    maps : sequence of Matrix
        ``maps[n]`` is the matrix of level n+1 -> level n.
    name : str
        cosmetic; built-in towers use their generator name.
    generator : callable, optional
        ``generator(depth)`` rebuilds the tower to ``depth``; enables
        :meth:`deepen`.
    prefix_stable : bool, optional
        set by ``stabilized_images``: whether the images were unchanged by
        the deepest level.
    """

    __slots__ = ("field", "levels", "maps", "name", "generator", "prefix_stable")

    def __init__(
        self,
        field: Field,
        levels: Sequence[FinModule],
        maps: Sequence[Matrix],
        name: str = "",
        generator: TowerGenerator | None = None,
        prefix_stable: bool | None = None,
    ) -> None:
        self.field = field
        self.levels = tuple(levels)
        self.maps = tuple(maps)
        self.name = name
        self.generator = generator
        self.prefix_stable = prefix_stable
        if not self.levels:
            raise TowerError("a tower needs at least one level")
        if len(self.maps) != len(self.levels) - 1:
            raise TowerError(f"{len(self.levels)} levels need {len(self.levels) - 1} maps, got {len(self.maps)}")
        for lv in self.levels:
            check_same_field(field, lv.field)
        for n, m in enumerate(self.maps):
            check_same_field(field, m.field)
            expected = (self.levels[n].rank, self.levels[n + 1].rank)
            if m.shape != expected:
                raise TowerError(f"map {n} has shape {m.shape}, expected {expected}")

    # -- Construction --------------------------------------------------------

    @classmethod
    def from_dims(cls, field: Field, dims: Sequence[int], maps: Sequence[Matrix], name: str = "") -> Tower:
        return cls(field, [FinModule(field, d) for d in dims], maps, name)

    @classmethod
    def constant(cls, m: FinModule, depth: int) -> Tower:
        """``m <- m <- ...`` with identity maps."""
        eye = Matrix.identity(m.field, m.rank)
        return cls(
            m.field, [m] * (depth + 1), [eye] * depth, "constant",
            generator=lambda d: Tower.constant(m, d),
        )

    @classmethod
    def zero(cls, field: Field, depth: int) -> Tower:
        return cls.constant(FinModule(field, 0), depth)

    def deepen(self, depth: int) -> Tower:
        """The same tower materialized to ``depth`` through the generator."""
        if depth <= self.depth:
            return self.truncate(depth)
        if self.generator is None:
            raise TowerError(f"tower {self.name or '?'} has no generator and cannot be deepened")
        deeper = self.generator(depth)
        if deeper.levels[: len(self.levels)] != self.levels or deeper.maps[: len(self.maps)] != self.maps:
            raise TowerError("generator does not extend the materialized prefix")
        return deeper

    def truncate(self, depth: int) -> Tower:
        if not 0 <= depth <= self.depth:
            raise TowerError(f"depth {depth} outside 0..{self.depth}")
        return type(self)._rebuild(self, depth)

    @staticmethod
    def _rebuild(t: Tower, depth: int) -> Tower:
        return Tower(t.field, t.levels[: depth + 1], t.maps[:depth], t.name, t.generator)

    # -- Queries -------------------------------------------------------------

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    @property
    def dims(self) -> list[int]:
        return [lv.rank for lv in self.levels]

    def map(self, n: int) -> LinearMap:
        return LinearMap(self.levels[n + 1], self.levels[n], self.maps[n])

    def composite(self, source: int, target: int) -> Matrix:
        """Matrix of level ``source`` -> level ``target`` (source >= target)."""
        if source < target:
            raise TowerError(f"no map from level {source} to level {target}")
        m = Matrix.identity(self.field, self.levels[source].rank)
        for n in range(source - 1, target - 1, -1):
            m = self.maps[n] @ m
        return m

    def is_surjective(self) -> bool:
        return all(rank(m) == m.rows for m in self.maps)

    def first_non_surjective(self) -> int | None:
        for n, m in enumerate(self.maps):
            if rank(m) != m.rows:
                return n
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tower):
            return NotImplemented
        return self.field == other.field and self.dims == other.dims and self.maps == other.maps

    def __hash__(self) -> int:
        return hash((self.field, tuple(self.dims), self.maps))

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name or '?'} dims={self.dims}>"


class AlgebraTower(Tower):
    """A tower of algebras whose connecting maps are algebra morphisms."""

    __slots__ = ("algebras",)

    def __init__(
        self,
        algebras: Sequence[FinAlgebra],
        maps: Sequence[Matrix],
        name: str = "",
        generator: TowerGenerator | None = None,
    ) -> None:
        algebras = tuple(algebras)
        if not algebras:
            raise TowerError("a tower needs at least one level")
        field = algebras[0].field
        super().__init__(field, [a.module for a in algebras], maps, name, generator)
        self.algebras = algebras
        for n, m in enumerate(self.maps):
            AlgebraMorphism(algebras[n + 1], algebras[n], m)

    @staticmethod
    def _rebuild(t: Tower, depth: int) -> Tower:
        assert isinstance(t, AlgebraTower)
        return AlgebraTower(t.algebras[: depth + 1], t.maps[:depth], t.name, t.generator)

    def morphism(self, n: int) -> AlgebraMorphism:
        return AlgebraMorphism(self.algebras[n + 1], self.algebras[n], self.maps[n])


# ---------------------------------------------------------------------------
# Elements and functionals
# ---------------------------------------------------------------------------

class TowerElement:
    """A compatible family of coordinate vectors, one per materialized level."""

    __slots__ = ("tower", "coords")

    def __init__(self, tower: Tower, coords: Sequence[Sequence[Any]]) -> None:
        self.tower = tower
        f = tower.field
        if len(coords) != len(tower.levels):
            raise TowerError(f"element needs {len(tower.levels)} levels of coordinates, got {len(coords)}")
        self.coords = tuple(f.vector(c) for c in coords)
        for n, (lv, c) in enumerate(zip(tower.levels, self.coords)):
            if len(c) != lv.rank:
                raise TowerError(f"coordinates at level {n} have length {len(c)}, expected {lv.rank}")
        for n, m in enumerate(tower.maps):
            if m.apply(self.coords[n + 1]) != self.coords[n]:
                raise TowerError(f"coordinates at levels {n} and {n + 1} are not compatible")

    @classmethod
    def from_top(cls, tower: Tower, top: Sequence[Any]) -> TowerElement:
        """Propagate a vector at the deepest level down through the maps."""
        coords = [tuple(top)]
        for m in reversed(tower.maps):
            coords.append(m.apply(coords[-1]))
        return cls(tower, list(reversed(coords)))

    def level(self, n: int) -> Vector:
        return self.coords[n]

    def is_zero(self) -> bool:
        return all(not any(c) for c in self.coords)

    def __add__(self, other: TowerElement) -> TowerElement:
        f = self.tower.field
        return TowerElement(self.tower, [vector_add(f, a, b) for a, b in zip(self.coords, other.coords)])

    def scale(self, c: Any) -> TowerElement:
        f = self.tower.field
        return TowerElement(self.tower, [vector_scale(f, f.coerce(c), v) for v in self.coords])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TowerElement):
            return NotImplemented
        return self.tower == other.tower and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)


class TowerFunctional:
    """A functional on the limit that factors through level ``start``.

    ``rows[k]`` is the functional on level ``start + k``; consecutive rows
    satisfy ``rows[k + 1] = rows[k] o maps[start + k]``.
    """

    __slots__ = ("tower", "start", "rows")

    def __init__(self, tower: Tower, start: int, rows: Sequence[Sequence[Any]]) -> None:
        f = tower.field
        self.tower = tower
        self.start = start
        self.rows = tuple(f.vector(r) for r in rows)
        if not 0 <= start <= tower.depth or len(self.rows) != tower.depth - start + 1:
            raise TowerError(f"functional from level {start} needs {tower.depth - start + 1} rows")
        for k, r in enumerate(self.rows):
            if len(r) != tower.levels[start + k].rank:
                raise TowerError(f"functional at level {start + k} has length {len(r)}")
        for k in range(len(self.rows) - 1):
            pulled = Matrix.row_vector(f, self.rows[k]) @ tower.maps[start + k]
            if pulled.row(0) != self.rows[k + 1]:
                raise InconsistentFunctionalError(
                    f"functional at level {start + k + 1} is not the pullback of level {start + k}"
                )

    @classmethod
    def through(cls, tower: Tower, level: int, row: Sequence[Any]) -> TowerFunctional:
        """Extend a functional on one level upward by composition."""
        f = tower.field
        rows = [f.vector(row)]
        for n in range(level, tower.depth):
            rows.append((Matrix.row_vector(f, rows[-1]) @ tower.maps[n]).row(0))
        return cls(tower, level, rows)

    @classmethod
    def from_levels(cls, tower: Tower, rows: Sequence[Sequence[Any]]) -> TowerFunctional:
        """Functionals given at every level; raises if they are not compatible."""
        return cls(tower, 0, rows)

    def at(self, n: int) -> Vector:
        if n < self.start:
            raise TowerError(f"functional does not factor through level {n}")
        return self.rows[n - self.start]

    def __call__(self, element: TowerElement) -> Any:
        n = self.tower.depth
        return self.tower.field.dot(self.at(n), element.level(n))

    def is_zero(self) -> bool:
        return not any(self.rows[-1])


# ---------------------------------------------------------------------------
# Direct systems
# ---------------------------------------------------------------------------

class DirectSystem:
    """``level 0 -> level 1 -> ...`` with injective maps; ``maps[n]``: level n -> level n+1."""

    __slots__ = ("field", "levels", "maps")

    def __init__(self, field: Field, levels: Sequence[FinModule], maps: Sequence[Matrix]) -> None:
        self.field = field
        self.levels = tuple(levels)
        self.maps = tuple(maps)
        if len(self.maps) != len(self.levels) - 1:
            raise TowerError(f"{len(self.levels)} levels need {len(self.levels) - 1} maps")
        for n, m in enumerate(self.maps):
            if m.shape != (self.levels[n + 1].rank, self.levels[n].rank):
                raise TowerError(f"direct-system map {n} has shape {m.shape}")
            if rank(m) != m.cols:
                raise TowerError(f"direct-system map {n} is not injective")

    @property
    def dims(self) -> list[int]:
        return [lv.rank for lv in self.levels]

    def dual(self) -> Tower:
        """The inverse system of duals (transposed maps)."""
        return Tower(self.field, [dual_module(lv) for lv in self.levels], [m.transpose() for m in self.maps])

    def __repr__(self) -> str:
        return f"<DirectSystem dims={self.dims}>"
