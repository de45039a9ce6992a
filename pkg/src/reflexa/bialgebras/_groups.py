"""Finite groups from Cayley tables and the two bialgebras they give.

Elements are indices ``0..n-1`` with 0 the identity; ``table[a][b]``
is the index of ``a * b``.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from functools import cached_property

import sympy

from reflexa.algebras import FinAlgebra
from reflexa.linalg import Field

from ._bialgebra import FinBialgebra
from ._coalgebra import BialgebraError, FinCoalgebra


class GroupTableError(BialgebraError):
    """A Cayley table does not define a group."""


class FiniteGroup:
    """A group stored as its Cayley table on indices."""

    def __init__(self, table: Sequence[Sequence[int]], name: str = "G") -> None:
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.name = name
        self._validate()

    def _validate(self) -> None:
        n = len(self.table)
        if n == 0:
            raise GroupTableError(f"{self.name}: empty table")
        for a, row in enumerate(self.table):
            if len(row) != n:
                raise GroupTableError(f"{self.name}: row {a} has {len(row)} entries, expected {n}")
            if any(not 0 <= x < n for x in row):
                raise GroupTableError(f"{self.name}: row {a} has an entry outside 0..{n - 1}")
        for a in range(n):
            if self.table[0][a] != a or self.table[a][0] != a:
                raise GroupTableError(f"{self.name}: element 0 is not the identity (fails at {a})")
            if 0 not in self.table[a]:
                raise GroupTableError(f"{self.name}: element {a} has no inverse")
        for a, b, c in itertools.product(range(n), repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise GroupTableError(f"{self.name}: ({a}*{b})*{c} != {a}*({b}*{c})")

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.table[a].index(0)

    @cached_property
    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(n))

    @cached_property
    def exponent(self) -> int:
        def element_order(a: int) -> int:
            k, x = 1, a
            while x != 0:
                x = self.mul(x, a)
                k += 1
            return k

        return int(sympy.ilcm(*(element_order(a) for a in self.elements)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


# -- Constructors -------------------------------------------------------------

def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], f"Z{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Pairs ``(a, b)`` at index ``a * |h| + b``."""
    m = h.order
    pairs = list(itertools.product(g.elements, h.elements))
    table = [[g.mul(a, c) * m + h.mul(b, d) for c, d in pairs] for a, b in pairs]
    return FiniteGroup(table, f"{g.name}x{h.name}")


def symmetric_group(k: int) -> FiniteGroup:
    """Permutations of ``k`` points in lexicographic order, composed as (p q)(i) = p(q(i))."""
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(k))] for q in perms] for p in perms]
    return FiniteGroup(table, f"S{k}")


GROUPS: dict[str, Callable[[], FiniteGroup]] = {
    "Z2": lambda: cyclic_group(2),
    "Z3": lambda: cyclic_group(3),
    "Z2xZ2": lambda: direct_product(cyclic_group(2), cyclic_group(2)),
    "S3": lambda: symmetric_group(3),
}


def group_by_name(name: str) -> FiniteGroup:
    if name in GROUPS:
        return GROUPS[name]()
    if name.startswith("Z") and name[1:].isdigit() and int(name[1:]) > 0:
        return cyclic_group(int(name[1:]))
    raise GroupTableError(f"unknown group {name!r} (known: {', '.join(GROUPS)}, Zn)")


def excluded_characteristics(g: FiniteGroup) -> frozenset[int]:
    """Characteristics in which |G| is not invertible."""
    return frozenset(sympy.primefactors(g.order))


# -- Bialgebras -----------------------------------------------------------------

def group_bialgebra(g: FiniteGroup, field: Field) -> FinBialgebra:
    """K[G]: e_a e_b = e_{ab}, every e_a grouplike."""
    n = g.order
    algebra = FinAlgebra.from_products(
        field, n, lambda a, b: field.unit_vector(n, g.mul(a, b)), field.unit_vector(n, 0), f"K[{g.name}]"
    )
    coalgebra = FinCoalgebra(
        field, n, tuple(((a, a, 1),) for a in range(n)), (field.one,) * n, f"K[{g.name}]"
    )
    return FinBialgebra(algebra, coalgebra, f"K[{g.name}]")


def function_bialgebra(g: FiniteGroup, field: Field) -> FinBialgebra:
    """K^G on the point functions: pointwise product, coproduct dual to the group law."""
    n = g.order
    label = f"K^{g.name}"
    algebra = FinAlgebra.from_products(
        field,
        n,
        lambda a, b: field.unit_vector(n, a) if a == b else field.zero_vector(n),
        (field.one,) * n,
        label,
    )
    comult = tuple(
        tuple((b, g.mul(g.inverse(b), a), 1) for b in range(n))
        for a in range(n)
    )
    coalgebra = FinCoalgebra(field, n, comult, field.unit_vector(n, 0), label)
    return FinBialgebra(algebra, coalgebra, label)


@dataclass(frozen=True)
class BialgebraFixture:
    """A named bialgebra together with the characteristics where its self-duality checks are skipped."""

    name: str
    group: FiniteGroup
    build: Callable[[Field], FinBialgebra]

    @property
    def excluded_characteristics(self) -> frozenset[int]:
        return excluded_characteristics(self.group)

    def applies_to(self, field: Field) -> bool:
        return field.characteristic not in self.excluded_characteristics


def group_fixtures() -> list[BialgebraFixture]:
    out = []
    for name, make in GROUPS.items():
        g = make()
        out.append(BialgebraFixture(f"K[{name}]", g, lambda f, g=g: group_bialgebra(g, f)))
        out.append(BialgebraFixture(f"K^{name}", g, lambda f, g=g: function_bialgebra(g, f)))
    return out
