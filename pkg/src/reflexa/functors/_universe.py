"""Finite universes of test algebras.

A ``Universe`` is a finite category of commutative algebras: a list of
algebras, one of which is the *base* (initial for the listed morphisms),
and a list of algebra morphisms closed under composition.  For universes
of K-algebras the base is K itself and the structural maps are the unit
maps; a universe of S-algebras uses S as base and its structure maps
S -> T as structural morphisms.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from reflexa.algebras import (
    AlgebraMorphism,
    TestAlgebra,
    base_algebra,
    polynomial_morphism,
    product_algebra,
    square_zero_algebra,
    truncated_polynomial,
)
from reflexa.errors import ReflexaError
from reflexa.linalg import Field, Matrix, check_same_field

logger = logging.getLogger(__name__)


class UniverseError(ReflexaError):
    """A universe is malformed: missing identities or structural maps, or not closed."""


@dataclass(frozen=True)
class UniverseMorphism:
    """A morphism of the universe between the algebras at ``src`` and ``dst``."""

    src: int
    dst: int
    matrix: Matrix

    @property
    def key(self) -> tuple[int, int, Matrix]:
        return (self.src, self.dst, self.matrix)


class Universe:
    """A validated finite diagram of test algebras.

    Parameters
    ----------
    field : Field
        The base field shared by every algebra.
    algebras : sequence of TestAlgebra
        The objects; no two may be equal as algebras.
    morphisms : sequence of UniverseMorphism
        Must contain every identity, a structural morphism from ``base``
        to every algebra, and the composite of every composable pair.
    base : int
        Index of the initial algebra.
    structural : sequence of int, optional
        ``structural[i]`` is the index of the chosen morphism base -> i.
        When omitted, the unit maps are used (``base`` must then be K).
    """

    def __init__(
        self,
        field: Field,
        algebras: Sequence[TestAlgebra],
        morphisms: Sequence[UniverseMorphism],
        base: int = 0,
        structural: Sequence[int] | None = None,
        name: str = "",
    ) -> None:
        self.field = field
        self.algebras = tuple(algebras)
        self.morphisms = tuple(morphisms)
        self.base = base
        self.name = name
        if not 0 <= base < len(self.algebras):
            raise UniverseError(f"base index {base} out of range")
        for a in self.algebras:
            check_same_field(field, a.field)
            if not isinstance(a, TestAlgebra):
                raise UniverseError(f"{a.name} is not a commutative test algebra")
        for i, a in enumerate(self.algebras):
            for j in range(i):
                if self.algebras[j] == a:
                    raise UniverseError(f"algebras {j} and {i} coincide")

        self._index: dict[tuple[int, int, Matrix], int] = {}
        for k, m in enumerate(self.morphisms):
            if not (0 <= m.src < len(self.algebras) and 0 <= m.dst < len(self.algebras)):
                raise UniverseError(f"morphism {k} refers to a missing algebra")
            AlgebraMorphism(self.algebras[m.src], self.algebras[m.dst], m.matrix)
            if m.key in self._index:
                raise UniverseError(f"morphisms {self._index[m.key]} and {k} coincide")
            self._index[m.key] = k

        self.identities = tuple(self._require(i, i, Matrix.identity(field, a.dim), "identity") for i, a in enumerate(self.algebras))
        if structural is None:
            if self.algebras[base].dim != 1:
                raise UniverseError("unit maps as structural morphisms need a one-dimensional base")
            self.structural = tuple(
                self._require(base, i, Matrix.column_vector(field, a.unit), "structural map")
                for i, a in enumerate(self.algebras)
            )
        else:
            self.structural = tuple(structural)
            if len(self.structural) != len(self.algebras):
                raise UniverseError("one structural morphism per algebra is required")
            for i, k in enumerate(self.structural):
                m = self.morphisms[k]
                if (m.src, m.dst) != (base, i):
                    raise UniverseError(f"structural morphism {k} does not go from the base to algebra {i}")
            if self.structural[base] != self.identities[base]:
                raise UniverseError("the structural morphism of the base must be its identity")

        for k, m in enumerate(self.morphisms):
            sigma_src = self.morphisms[self.structural[m.src]].matrix
            sigma_dst = self.morphisms[self.structural[m.dst]].matrix
            if m.matrix @ sigma_src != sigma_dst:
                raise UniverseError(f"morphism {k} does not commute with the structural maps")

        self.composition: dict[tuple[int, int], int] = {}
        for i, f in enumerate(self.morphisms):
            for j, g in enumerate(self.morphisms):
                if g.src != f.dst:
                    continue
                key = (f.src, g.dst, g.matrix @ f.matrix)
                k = self._index.get(key)
                if k is None:
                    raise UniverseError(
                        f"not closed under composition: morphism {j} after morphism {i} is not listed"
                    )
                self.composition[(j, i)] = k

    def _require(self, src: int, dst: int, matrix: Matrix, what: str) -> int:
        k = self._index.get((src, dst, matrix))
        if k is None:
            raise UniverseError(f"missing {what} {src} -> {dst}")
        return k

    # -- Queries -------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.algebras)

    @property
    def base_algebra(self) -> TestAlgebra:
        return self.algebras[self.base]

    def index_of(self, algebra: TestAlgebra) -> int:
        for i, a in enumerate(self.algebras):
            if a == algebra:
                return i
        raise UniverseError(f"{algebra.name} is not in the universe")

    def find_morphism(self, src: int, dst: int, matrix: Matrix) -> int | None:
        return self._index.get((src, dst, matrix))

    def morphism(self, k: int) -> AlgebraMorphism:
        m = self.morphisms[k]
        return AlgebraMorphism(self.algebras[m.src], self.algebras[m.dst], m.matrix)

    def non_identity_morphisms(self) -> list[int]:
        ids = set(self.identities)
        return [k for k in range(len(self.morphisms)) if k not in ids]

    def label(self, i: int) -> str:
        return self.algebras[i].label or f"S{i}"

    def __repr__(self) -> str:
        return f"<Universe {self.name or '?'}: {len(self.algebras)} algebras, {len(self.morphisms)} morphisms>"

    # -- Construction --------------------------------------------------------

    @classmethod
    def close(
        cls,
        field: Field,
        algebras: Sequence[TestAlgebra],
        generators: Iterable[UniverseMorphism],
        base: int = 0,
        structural: Sequence[Matrix] | None = None,
        name: str = "",
        max_morphisms: int = 2000,
    ) -> Universe:
        """Build the smallest universe containing ``generators``.

        Identities, structural morphisms (unit maps, or the given
        ``structural`` matrices) and all composites are added.
        """
        arrows: list[UniverseMorphism] = []
        seen: set[tuple[int, int, Matrix]] = set()

        def add(m: UniverseMorphism) -> None:
            if m.key not in seen:
                seen.add(m.key)
                arrows.append(m)

        for i, a in enumerate(algebras):
            add(UniverseMorphism(i, i, Matrix.identity(field, a.dim)))
        if structural is None:
            structural = [Matrix.column_vector(field, a.unit) for a in algebras]
        for i, s in enumerate(structural):
            add(UniverseMorphism(base, i, s))
        for g in generators:
            add(g)

        done = 0
        while done < len(arrows):
            # every pair involving at least one arrow newer than `done`
            n = len(arrows)
            for i in range(n):
                for j in range(n):
                    if i < done and j < done:
                        continue
                    f, g = arrows[i], arrows[j]
                    if g.src == f.dst:
                        add(UniverseMorphism(f.src, g.dst, g.matrix @ f.matrix))
                        if len(arrows) > max_morphisms:
                            raise UniverseError(f"closure exceeds {max_morphisms} morphisms")
            done = n
        logger.debug("closed universe %s: %d algebras, %d morphisms", name, len(algebras), len(arrows))

        struct_idx = None
        if base != 0 or structural is not None:
            index = {m.key: k for k, m in enumerate(arrows)}
            struct_idx = [index[(base, i, s)] for i, s in enumerate(structural)]
        return cls(field, algebras, arrows, base, struct_idx, name)


# ---------------------------------------------------------------------------
# Built-in universes
# ---------------------------------------------------------------------------

def _augmentation(a: TestAlgebra) -> Matrix:
    """x |-> 0 on an algebra whose basis starts with 1 and is otherwise nilpotent."""
    f = a.field
    return Matrix.row_vector(f, f.unit_vector(a.dim, 0))


def reference_universe(field: Field) -> Universe:
    """K, K[x]/x^2, K[x]/x^3, K[x,y]/(x,y)^2 and K x K.

    Generating morphisms: evaluations x |-> 0, both projections of K x K,
    truncation K[x]/x^3 -> K[x]/x^2, x |-> x^2 from K[x]/x^2 to K[x]/x^3,
    x |-> x and x |-> y into K[x,y]/(x,y)^2, the two maps back sending
    (x, y) to (x, 0) and (0, x), and the swap of K x K.
    """
    k = base_algebra(field)
    d2 = truncated_polynomial(field, 2)
    d3 = truncated_polynomial(field, 3)
    e = square_zero_algebra(field, 2)
    p = product_algebra(field, 2)
    algebras = [k, d2, d3, e, p]
    K, D2, D3, E, P = range(5)
    o, z = field.one, field.zero

    gens = [
        UniverseMorphism(D2, K, _augmentation(d2)),
        UniverseMorphism(D3, K, _augmentation(d3)),
        UniverseMorphism(E, K, _augmentation(e)),
        UniverseMorphism(P, K, Matrix.from_rows(field, [[o, z]])),
        UniverseMorphism(P, K, Matrix.from_rows(field, [[z, o]])),
        UniverseMorphism(D3, D2, polynomial_morphism(d3, d2, (z, o)).matrix),
        UniverseMorphism(D2, D3, polynomial_morphism(d2, d3, (z, z, o)).matrix),
        UniverseMorphism(D2, E, polynomial_morphism(d2, e, (z, o, z)).matrix),
        UniverseMorphism(D2, E, polynomial_morphism(d2, e, (z, z, o)).matrix),
        UniverseMorphism(E, D2, Matrix.from_rows(field, [[o, z, z], [z, o, z]])),
        UniverseMorphism(E, D2, Matrix.from_rows(field, [[o, z, z], [z, z, o]])),
        UniverseMorphism(P, P, Matrix.from_rows(field, [[z, o], [o, z]])),
    ]
    return Universe.close(field, algebras, gens, name="reference")


def base_universe(field: Field) -> Universe:
    """The universe containing only K."""
    return Universe.close(field, [base_algebra(field)], [], name="base")


def _truncated_degree(a: TestAlgebra) -> int | None:
    if a == truncated_polynomial(a.field, a.dim):
        return a.dim
    return None


def enlarge_universe(u: Universe) -> Universe:
    """Add K[x]/x^(N+1), N the largest truncated polynomial algebra present.

    New generators: x |-> 0, truncation to K[x]/x^N and x |-> x^2 back.
    Only universes of K-algebras can be enlarged.
    """
    if u.base_algebra.dim != 1:
        raise UniverseError("only universes of K-algebras can be enlarged")
    f = u.field
    degrees = [d for d in (_truncated_degree(a) for a in u.algebras) if d is not None]
    n = max(degrees)
    new = truncated_polynomial(f, n + 1)
    algebras = list(u.algebras) + [new]
    idx = len(u.algebras)
    gens = list(u.morphisms)
    gens.append(UniverseMorphism(idx, u.base, _augmentation(new)))
    if n > 1:
        prev_i = next(i for i, a in enumerate(u.algebras) if _truncated_degree(a) == n)
        prev = u.algebras[prev_i]
        x_prev = f.unit_vector(n, 1)
        x_new = f.unit_vector(n + 1, 1)
        gens.append(UniverseMorphism(idx, prev_i, polynomial_morphism(new, prev, x_prev).matrix))
        gens.append(UniverseMorphism(prev_i, idx, polynomial_morphism(prev, new, new.product(x_new, x_new)).matrix))
    name = f"{u.name}+x^{n + 1}" if u.name else ""
    logger.info("enlarging universe with K[x]/x^%d", n + 1)
    return Universe.close(f, algebras, gens, base=u.base, name=name)
