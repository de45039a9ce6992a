"""Bialgebras and bialgebra morphisms."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from reflexa.algebras import FinAlgebra, StructureError
from reflexa.linalg import DimensionError, Field, Matrix, Vector, check_same_field, inverse, kron, kron_vector
from reflexa.model import Verdict

from ._coalgebra import BialgebraError, FinCoalgebra, MorphismError, Term


@dataclass(frozen=True, eq=False)
class FinBialgebra:
    """An algebra and a coalgebra on the same space whose comultiplication and counit are algebra maps."""

    algebra: FinAlgebra
    coalgebra: FinCoalgebra
    label: str = ""

    def __post_init__(self) -> None:
        a, c = self.algebra, self.coalgebra
        check_same_field(a.field, c.field)
        if a.dim != c.dim:
            raise DimensionError(f"algebra of dim {a.dim} and coalgebra of dim {c.dim}")
        self._check_compatibility()

    def _check_compatibility(self) -> None:
        a, f, n = self.algebra, self.field, self.dim
        d = self.coalgebra.comult_matrix
        terms = self.coalgebra.comult
        for i in range(n):
            for j in range(n):
                # comult(e_i) comult(e_j) summed termwise in A (x) A
                acc = [f.zero] * (n * n)
                for p, q, c in terms[i]:
                    for r, s, c2 in terms[j]:
                        left, right = a.basis_product(p, r), a.basis_product(q, s)
                        coeff = f.mul(c, c2)
                        for u, x in enumerate(left):
                            if not x:
                                continue
                            for v, y in enumerate(right):
                                if y:
                                    acc[u * n + v] = f.add(acc[u * n + v], f.mul(coeff, f.mul(x, y)))
                if d.apply(a.basis_product(i, j)) != tuple(acc):
                    raise BialgebraError(f"{self.name}: comult(e{i} e{j}) != comult(e{i}) comult(e{j})")
        if d.apply(a.unit) != kron_vector(f, a.unit, a.unit):
            raise BialgebraError(f"{self.name}: comult(1) != 1 (x) 1")
        e = self.coalgebra.counit_matrix
        if e @ a.mult != kron(e, e):
            raise BialgebraError(f"{self.name}: counit is not multiplicative")
        if f.dot(self.coalgebra.counit, a.unit) != f.one:
            raise BialgebraError(f"{self.name}: counit(1) != 1")

    # -- Accessors -----------------------------------------------------------

    @property
    def name(self) -> str:
        return self.label or self.algebra.label or f"bialgebra of dim {self.dim}"

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def mult(self) -> Matrix:
        return self.algebra.mult

    @property
    def unit(self) -> Vector:
        return self.algebra.unit

    @property
    def comult(self) -> Matrix:
        return self.coalgebra.comult_matrix

    @property
    def counit(self) -> Vector:
        return self.coalgebra.counit

    def is_commutative(self) -> bool:
        return self.algebra.is_commutative()

    def is_cocommutative(self) -> bool:
        return self.coalgebra.is_cocommutative()

    def relabel(self, label: str) -> FinBialgebra:
        return FinBialgebra(self.algebra.relabel(label), self.coalgebra.relabel(label), label)

    def same_structure(self, other: FinBialgebra) -> bool:
        return self.algebra.same_structure(other.algebra) and self.coalgebra.same_structure(other.coalgebra)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinBialgebra):
            return NotImplemented
        return self.same_structure(other)

    def __hash__(self) -> int:
        return hash((self.algebra, self.coalgebra))

    def __repr__(self) -> str:
        return f"<FinBialgebra {self.name} over {self.field}>"


# ---------------------------------------------------------------------------
# Morphisms
# ---------------------------------------------------------------------------

def is_bialgebra_morphism(source: FinBialgebra, target: FinBialgebra, matrix: Matrix) -> Verdict:
    """Check the four structure identities of a map ``source -> target``."""
    f = source.field
    check_same_field(f, target.field, matrix.field)
    if matrix.shape != (target.dim, source.dim):
        return Verdict.failed(
            "matrix does not fit the bialgebras",
            {"shape": list(matrix.shape), "expected": [target.dim, source.dim]},
        )
    n = source.dim
    fmt = f.format
    if matrix.apply(source.unit) != target.unit:
        return Verdict.failed("unit is not preserved", {"identity": "unit"})
    lhs = matrix @ source.mult
    rhs = target.mult @ kron(matrix, matrix)
    if lhs != rhs:
        c = next(c for c in range(n * n) if lhs.column(c) != rhs.column(c))
        return Verdict.failed(
            "multiplication is not preserved",
            {"identity": "mult", "basis": [c // n, c % n], "image": [fmt(x) for x in lhs.column(c)]},
        )
    lhs = kron(matrix, matrix) @ source.comult
    rhs = target.comult @ matrix
    if lhs != rhs:
        i = next(i for i in range(n) if lhs.column(i) != rhs.column(i))
        return Verdict.failed("comultiplication is not preserved", {"identity": "comult", "basis": [i]})
    counit_image = (Matrix.row_vector(f, target.counit) @ matrix).row(0)
    if counit_image != source.counit:
        i = next(i for i in range(n) if counit_image[i] != source.counit[i])
        return Verdict.failed("counit is not preserved", {"identity": "counit", "basis": [i]})
    return Verdict.passed("bialgebra morphism")


@dataclass(frozen=True, eq=False)
class BialgebraMorphism:
    source: FinBialgebra
    target: FinBialgebra
    matrix: Matrix

    def __post_init__(self) -> None:
        v = is_bialgebra_morphism(self.source, self.target, self.matrix)
        if not v.ok:
            raise MorphismError(f"{self.source.name} -> {self.target.name}: {v.message} {v.witness}")

    @classmethod
    def identity(cls, b: FinBialgebra) -> BialgebraMorphism:
        return cls(b, b, Matrix.identity(b.field, b.dim))

    def __call__(self, x: Sequence[Any]) -> Vector:
        return self.matrix.apply(x)

    def compose(self, other: BialgebraMorphism) -> BialgebraMorphism:
        """``self o other``."""
        return BialgebraMorphism(other.source, self.target, self.matrix @ other.matrix)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BialgebraMorphism):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.matrix))


def counit_unit_morphism(source: FinBialgebra, target: FinBialgebra) -> BialgebraMorphism:
    """x |-> counit(x) 1, the trivial morphism."""
    f = source.field
    m = Matrix.column_vector(f, target.unit) @ Matrix.row_vector(f, source.counit)
    return BialgebraMorphism(source, target, m)


def bialgebra_from_structure(
    field: Field,
    mult: Matrix,
    unit: Sequence[Any],
    comult: Sequence[Sequence[Term]],
    counit: Sequence[Any],
    label: str = "",
) -> FinBialgebra:
    """Assemble and validate; algebra and coalgebra axiom failures surface as ``BialgebraError``."""
    try:
        a = FinAlgebra(field, mult.rows, mult, tuple(unit), label)
        c = FinCoalgebra(field, mult.rows, tuple(tuple(t) for t in comult), tuple(counit), label)
    except StructureError as exc:
        raise BialgebraError(str(exc)) from exc
    return FinBialgebra(a, c, label)


def transport_bialgebra(b: FinBialgebra, matrix: Matrix, label: str = "") -> FinBialgebra:
    """The structure of ``b`` moved along the invertible ``matrix``.

    ``matrix`` becomes a bialgebra isomorphism from ``b`` to the result.
    """
    f, n = b.field, b.dim
    check_same_field(f, matrix.field)
    if matrix.shape != (n, n):
        raise DimensionError(f"change of basis must be {n}x{n}, got {matrix.shape}")
    back = inverse(matrix)
    a = FinAlgebra(f, n, matrix @ b.mult @ kron(back, back), matrix.apply(b.unit), label or b.algebra.label)
    c = FinCoalgebra.from_matrix(
        f,
        kron(matrix, matrix) @ b.comult @ back,
        (Matrix.row_vector(f, b.counit) @ back).row(0),
        label or b.coalgebra.label,
    )
    return FinBialgebra(a, c, label or b.label)
