"""Linearly recursive functionals on K[x].

A functional l on K[x] that vanishes on the ideal (f), f monic of degree
d, is determined by l(1), ..., l(x^(d-1)); its value sequence
a_n = l(x^n) satisfies a_(n+d) = -(f_0 a_n + ... + f_(d-1) a_(n+d-1)).
These are exactly the elements of the finite dual of K[x].

Two bialgebra structures on K[x] give two products on the functionals:

- ``grouplike`` (comult x = x (x) x): the Hadamard product a_n b_n;
- ``primitive`` (comult x = x (x) 1 + 1 (x) x): the binomial convolution
  sum_k C(n, k) a_k b_(n-k).

Products are computed value-first: enough terms of the product sequence
are generated, the smallest recurrence is recovered from the Hankel
system and then checked on further terms.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any, Literal

from reflexa.errors import ReflexaError
from reflexa.linalg import Field, FieldScalar, Matrix, Vector, check_same_field, solve

logger = logging.getLogger(__name__)

Model = Literal["primitive", "grouplike"]
MODELS: tuple[Model, ...] = ("primitive", "grouplike")

VERIFY_FACTOR = 3


class RecurrenceError(ReflexaError):
    """No recurrence within the degree bound fits a product or sum."""


class ModelMismatchError(ReflexaError):
    """Functionals from different models or fields were combined."""


# ---------------------------------------------------------------------------
# Recurrence recovery
# ---------------------------------------------------------------------------

def extend_sequence(field: Field, annihilator: Sequence[Any], values: Sequence[Any], count: int) -> Vector:
    """First ``count`` terms of the sequence with the given initial values and recurrence."""
    d = len(annihilator) - 1
    seq = list(values[:count])
    while len(seq) < count:
        n = len(seq) - d
        seq.append(field.reduce(-sum(annihilator[i] * seq[n + i] for i in range(d))))
    return tuple(seq)


def find_recurrence(field: Field, seq: Sequence[Any], max_degree: int) -> Vector | None:
    """Smallest monic annihilator of degree ``<= max_degree`` satisfied by every given term.

    Degree d is only tried when at least ``2 d`` terms are available, so
    that the fit is determined.
    """
    seq = field.vector(seq)
    if all(field.is_zero(x) for x in seq):
        return (field.zero, field.one)
    for d in range(1, max_degree + 1):
        if 2 * d > len(seq):
            break
        rows = [seq[n : n + d] for n in range(len(seq) - d)]
        rhs = [field.neg(seq[n + d]) for n in range(len(seq) - d)]
        coeffs = solve(Matrix.from_rows(field, rows, d), rhs)
        if coeffs is not None:
            logger.debug("recurrence of degree %d fits %d terms", d, len(seq))
            return tuple(coeffs) + (field.one,)
    return None


def binomial_rows(field: Field, count: int) -> list[Vector]:
    """Rows 0..count-1 of Pascal's triangle reduced into ``field``."""
    rows: list[Vector] = []
    row: Vector = (field.one,)
    for _ in range(count):
        rows.append(row)
        row = (field.one,) + tuple(field.add(row[k], row[k + 1]) for k in range(len(row) - 1)) + (field.one,)
    return rows


# ---------------------------------------------------------------------------
# RecursiveFunctional
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RecursiveFunctional:
    """A functional on K[x] killing the ideal generated by ``annihilator``.

    ``annihilator`` lists coefficients from degree 0 up and ends in 1;
    ``values`` holds l(1), ..., l(x^(d-1)).
    """

    field: Field
    model: Model
    annihilator: Vector
    values: Vector

    def __post_init__(self) -> None:
        f = self.field
        if self.model not in MODELS:
            raise ModelMismatchError(f"unknown model {self.model!r}; expected one of {', '.join(MODELS)}")
        ann = f.vector(self.annihilator)
        vals = f.vector(self.values)
        if len(ann) < 2:
            raise RecurrenceError("annihilator must have degree >= 1")
        if ann[-1] != f.one:
            raise RecurrenceError(f"annihilator must be monic, leading coefficient is {f.format(ann[-1])}")
        if len(vals) != len(ann) - 1:
            raise RecurrenceError(f"annihilator of degree {len(ann) - 1} needs {len(ann) - 1} values, got {len(vals)}")
        object.__setattr__(self, "annihilator", ann)
        object.__setattr__(self, "values", vals)

    @property
    def degree(self) -> int:
        return len(self.annihilator) - 1

    def terms(self, count: int) -> Vector:
        """l(1), l(x), ..., l(x^(count-1))."""
        return extend_sequence(self.field, self.annihilator, self.values, count)

    def value(self, n: int) -> Any:
        return self.terms(n + 1)[n]

    def evaluate(self, n: int) -> FieldScalar:
        return self.field.scalar(self.value(n))

    def is_zero(self) -> bool:
        return all(self.field.is_zero(x) for x in self.values)

    # -- Construction --------------------------------------------------------

    @classmethod
    def from_sequence(cls, field: Field, model: Model, seq: Sequence[Any], max_degree: int) -> RecursiveFunctional | None:
        ann = find_recurrence(field, seq, max_degree)
        if ann is None:
            return None
        seq = field.vector(seq)
        d = len(ann) - 1
        if extend_sequence(field, ann, seq[:d], len(seq)) != seq:
            return None
        return cls(field, model, ann, seq[:d])

    @classmethod
    def from_prefix(cls, field: Field, prefix: Sequence[Any], max_degree: int, model: Model = "grouplike") -> RecursiveFunctional | None:
        """Smallest recurrence of degree ``<= max_degree`` fitting the whole prefix, or ``None``."""
        return cls.from_sequence(field, model, prefix, max_degree)

    @classmethod
    def zero(cls, field: Field, model: Model = "grouplike") -> RecursiveFunctional:
        return cls(field, model, (field.zero, field.one), (field.zero,))

    @classmethod
    def geometric(cls, field: Field, r: Any, model: Model = "grouplike") -> RecursiveFunctional:
        """l(x^n) = r^n."""
        return cls(field, model, (field.neg(field.coerce(r)), field.one), (field.one,))

    @classmethod
    def ones(cls, field: Field, model: Model = "grouplike") -> RecursiveFunctional:
        return cls.geometric(field, 1, model)

    @classmethod
    def delta(cls, field: Field, model: Model = "primitive") -> RecursiveFunctional:
        """Evaluation of the constant term: l(1) = 1, l(x^n) = 0 for n > 0."""
        return cls(field, model, (field.zero, field.one), (field.one,))

    @classmethod
    def fibonacci(cls, field: Field, model: Model = "grouplike") -> RecursiveFunctional:
        m1 = field.neg(field.one)
        return cls(field, model, (m1, m1, field.one), (field.zero, field.one))

    @classmethod
    def unit(cls, field: Field, model: Model) -> RecursiveFunctional:
        """Identity for :meth:`multiply`: the counit of the chosen structure on K[x]."""
        return cls.ones(field, model) if model == "grouplike" else cls.delta(field, model)

    # -- Arithmetic ------------------------------------------------------------

    def _check_compatible(self, other: RecursiveFunctional) -> None:
        check_same_field(self.field, other.field)
        if self.model != other.model:
            raise ModelMismatchError(f"cannot combine {self.model} and {other.model} functionals")

    def minimize(self) -> RecursiveFunctional:
        """Equal functional with the annihilator of smallest degree."""
        if self.is_zero():
            return RecursiveFunctional.zero(self.field, self.model)
        d = self.degree
        out = RecursiveFunctional.from_sequence(self.field, self.model, self.terms(2 * d), d)
        if out is None:
            raise RecurrenceError(f"no recurrence of degree <= {d} reproduces the functional")
        return out

    def _fit(self, seq: Vector, bound: int, verify: Vector, what: str) -> RecursiveFunctional:
        out = RecursiveFunctional.from_sequence(self.field, self.model, seq, bound)
        if out is None:
            raise RecurrenceError(f"{what}: no recurrence of degree <= {bound} found")
        if out.terms(len(verify)) != verify:
            raise RecurrenceError(f"{what}: recurrence of degree {out.degree} fails on the verification terms")
        return out

    def add(self, other: RecursiveFunctional) -> RecursiveFunctional:
        self._check_compatible(other)
        f = self.field
        bound = self.degree + other.degree
        count = 2 * bound + VERIFY_FACTOR * bound
        seq = tuple(f.add(a, b) for a, b in zip(self.terms(count), other.terms(count)))
        return self._fit(seq[: 2 * bound], bound, seq, "sum")

    def scale(self, c: Any) -> RecursiveFunctional:
        f = self.field
        c = f.coerce(c)
        if f.is_zero(c):
            return RecursiveFunctional.zero(f, self.model)
        return RecursiveFunctional(f, self.model, self.annihilator, tuple(f.mul(c, v) for v in self.values))

    def negate(self) -> RecursiveFunctional:
        return self.scale(self.field.neg(self.field.one))

    def product_terms(self, other: RecursiveFunctional, count: int) -> Vector:
        """First ``count`` values of the product functional."""
        self._check_compatible(other)
        f = self.field
        a, b = self.terms(count), other.terms(count)
        if self.model == "grouplike":
            return tuple(f.mul(x, y) for x, y in zip(a, b))
        pascal = binomial_rows(f, count)
        return tuple(
            f.reduce(sum(pascal[n][k] * a[k] * b[n - k] for k in range(n + 1)))
            for n in range(count)
        )

    def multiply(self, other: RecursiveFunctional) -> RecursiveFunctional:
        """Product induced by the comultiplication of the chosen model."""
        bound = self.degree * other.degree
        seq = self.product_terms(other, 2 * bound + VERIFY_FACTOR * bound)
        out = self._fit(seq[: 2 * bound], bound, seq, "product")
        logger.debug("%s product of degrees %d and %d has degree %d", self.model, self.degree, other.degree, out.degree)
        return out

    def __add__(self, other: RecursiveFunctional) -> RecursiveFunctional:
        return self.add(other)

    def __mul__(self, other: RecursiveFunctional) -> RecursiveFunctional:
        return self.multiply(other)

    def __neg__(self) -> RecursiveFunctional:
        return self.negate()

    def same_functional(self, other: RecursiveFunctional, count: int | None = None) -> bool:
        """Equal as functionals (compares ``d1 + d2`` values, which determine both)."""
        self._check_compatible(other)
        n = count or self.degree + other.degree
        return self.terms(n) == other.terms(n)

    def __repr__(self) -> str:
        fmt = self.field.format
        ann = ", ".join(fmt(c) for c in self.annihilator)
        vals = ", ".join(fmt(v) for v in self.values)
        return f"RecursiveFunctional<{self.model} {self.field}>(annihilator=[{ann}], values=[{vals}])"
