"""Base fields and exact scalars.

Two kinds of field are supported: the rationals (raw elements are
``fractions.Fraction``) and prime fields GF(p) (raw elements are ``int``
residues in ``[0, p)``).  A ``Field`` owns all arithmetic on raw
elements; ``FieldScalar`` pairs a raw element with its field for the
public scalar API and refuses to combine elements of different fields.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from collections.abc import Iterable, Iterator
from random import Random
from typing import Any

from sympy import isprime

from reflexa.errors import ReflexaError


class LinalgError(ReflexaError):
    """Error in exact linear algebra."""


class FieldMismatchError(LinalgError):
    """Operands live over different fields."""


class DimensionError(LinalgError):
    """Operand shapes do not match."""


class NotInvertibleError(LinalgError):
    """A matrix or scalar has no inverse."""


# ---------------------------------------------------------------------------
# Fields
# ---------------------------------------------------------------------------

class Field:
    """A base field: the rationals or GF(p).

    Raw elements are plain Python numbers so that matrices can store them
    without wrapper objects.  Use :meth:`scalar` to obtain a ``FieldScalar``.
    """

    __slots__ = ()

    characteristic: int = 0

    # -- Subclass overrides --------------------------------------------------

    def coerce(self, value: Any) -> Any:
        raise NotImplementedError

    def reduce(self, value: Any) -> Any:
        raise NotImplementedError

    def inv(self, a: Any) -> Any:
        raise NotImplementedError

    def format(self, a: Any) -> str:
        raise NotImplementedError

    @property
    def spec(self) -> str:
        """Compact field string as accepted by ``parse_field``."""
        raise NotImplementedError

    # -- Arithmetic ----------------------------------------------------------

    @property
    def zero(self) -> Any:
        return self.reduce(0)

    @property
    def one(self) -> Any:
        return self.reduce(1)

    def add(self, a: Any, b: Any) -> Any:
        return self.reduce(a + b)

    def sub(self, a: Any, b: Any) -> Any:
        return self.reduce(a - b)

    def mul(self, a: Any, b: Any) -> Any:
        return self.reduce(a * b)

    def neg(self, a: Any) -> Any:
        return self.reduce(-a)

    def div(self, a: Any, b: Any) -> Any:
        return self.mul(a, self.inv(b))

    def power(self, a: Any, n: int) -> Any:
        if n < 0:
            return self.power(self.inv(a), -n)
        return self.reduce(a ** n)

    def dot(self, a: Iterable[Any], b: Iterable[Any]) -> Any:
        return self.reduce(sum(x * y for x, y in zip(a, b)))

    def is_zero(self, a: Any) -> bool:
        return a == 0

    def scalar(self, value: Any) -> FieldScalar:
        return FieldScalar(self, self.coerce(value))

    def vector(self, values: Iterable[Any]) -> tuple:
        return tuple(self.coerce(v) for v in values)

    def zero_vector(self, n: int) -> tuple:
        return (self.zero,) * n

    def unit_vector(self, n: int, k: int) -> tuple:
        z, o = self.zero, self.one
        return tuple(o if i == k else z for i in range(n))

    def random_element(self, rng: Random, bound: int = 5) -> Any:
        return self.reduce(rng.randint(-bound, bound))

    def parse(self, text: str) -> Any:
        """Parse the string form produced by :meth:`format`."""
        return self.coerce(text)

    def __repr__(self) -> str:
        return self.spec


class RationalField(Field):
    """The field of rational numbers; raw elements are ``Fraction``."""

    __slots__ = ()

    characteristic = 0

    def coerce(self, value: Any) -> Fraction:
        if isinstance(value, FieldScalar):
            if value.field != self:
                raise FieldMismatchError(f"cannot use {value.field} scalar over Q")
            return value.value
        if isinstance(value, bool) or isinstance(value, float):
            raise LinalgError(f"inexact or boolean value {value!r} is not a field element")
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            text = value.strip()
            if " mod " in text:
                raise FieldMismatchError(f"modular scalar {text!r} used over Q")
            try:
                return Fraction(text)
            except ValueError as e:
                raise LinalgError(f"cannot parse rational {value!r}") from e
        raise LinalgError(f"cannot convert {type(value).__name__} to a rational")

    def reduce(self, value: Any) -> Fraction:
        if isinstance(value, Fraction):
            return value
        return Fraction(value)

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise NotInvertibleError("division by zero in Q")
        return 1 / a

    def format(self, a: Fraction) -> str:
        return str(a)

    @property
    def spec(self) -> str:
        return "Q"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("Q")


class PrimeField(Field):
    """GF(p); raw elements are residues in ``[0, p)``."""

    __slots__ = ("characteristic",)

    def __init__(self, p: int) -> None:
        if not isinstance(p, int) or p < 2 or not isprime(p):
            raise LinalgError(f"GF(p) requires a prime modulus, got {p!r}")
        self.characteristic = p

    def coerce(self, value: Any) -> int:
        p = self.characteristic
        if isinstance(value, FieldScalar):
            if value.field != self:
                raise FieldMismatchError(f"cannot use {value.field} scalar over {self}")
            return value.value
        if isinstance(value, bool) or isinstance(value, float):
            raise LinalgError(f"inexact or boolean value {value!r} is not a field element")
        if isinstance(value, int):
            return value % p
        if isinstance(value, Fraction):
            return (value.numerator * pow(value.denominator, -1, p)) % p
        if isinstance(value, str):
            text = value.strip()
            m = _MODULAR_RE.match(text)
            if m is not None:
                if int(m.group(2)) != p:
                    raise FieldMismatchError(f"scalar {text!r} is not over {self}")
                return int(m.group(1)) % p
            try:
                return self.coerce(Fraction(text))
            except (ValueError, ZeroDivisionError) as e:
                raise LinalgError(f"cannot parse element of {self}: {value!r}") from e
        raise LinalgError(f"cannot convert {type(value).__name__} to an element of {self}")

    def reduce(self, value: Any) -> int:
        return value % self.characteristic

    def inv(self, a: int) -> int:
        if a % self.characteristic == 0:
            raise NotInvertibleError(f"division by zero in {self}")
        return pow(a, -1, self.characteristic)

    def format(self, a: int) -> str:
        return f"{a} mod {self.characteristic}"

    def elements(self) -> Iterator[int]:
        return iter(range(self.characteristic))

    def random_element(self, rng: Random, bound: int = 5) -> int:
        return rng.randrange(self.characteristic)

    @property
    def spec(self) -> str:
        return f"GF:{self.characteristic}"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self) -> int:
        return hash(("GF", self.characteristic))


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    """The prime field with ``p`` elements (cached)."""
    return PrimeField(p)


_MODULAR_RE = re.compile(r"^(-?\d+)\s+mod\s+(\d+)$")
_FIELD_RE = re.compile(r"^GF(?::|\()?(\d+)\)?$", re.IGNORECASE)


def parse_field(text: str) -> Field:
    """Parse ``Q``, ``GF:p``, ``GFp`` or ``GF(p)``."""
    t = text.strip()
    if t.upper() in ("Q", "QQ"):
        return QQ
    m = _FIELD_RE.match(t)
    if m is None:
        raise LinalgError(f"unknown field {text!r}; expected Q or GF:p")
    return GF(int(m.group(1)))


def check_same_field(*fields: Field) -> Field:
    """Return the common field, raising ``FieldMismatchError`` otherwise."""
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatchError(f"mixed fields {first} and {f}")
    return first


# ---------------------------------------------------------------------------
# FieldScalar
# ---------------------------------------------------------------------------

class FieldScalar:
    """An exact element of Q or GF(p).

    Arithmetic with plain ``int`` is allowed; arithmetic with a scalar of
    another field raises ``FieldMismatchError``.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: Any) -> None:
        self.field = field
        self.value = field.coerce(value)

    def _other(self, other: Any) -> Any:
        if isinstance(other, FieldScalar):
            check_same_field(self.field, other.field)
            return other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.coerce(other)
        return NotImplemented

    def _wrap(self, raw: Any) -> FieldScalar:
        return FieldScalar(self.field, raw)

    def __add__(self, other: Any) -> FieldScalar:
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other: Any) -> FieldScalar:
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other: Any) -> FieldScalar:
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other: Any) -> FieldScalar:
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> FieldScalar:
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.div(self.value, o))

    def __rtruediv__(self, other: Any) -> FieldScalar:
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.div(o, self.value))

    def __neg__(self) -> FieldScalar:
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, n: int) -> FieldScalar:
        return self._wrap(self.field.power(self.value, n))

    def inverse(self) -> FieldScalar:
        return self._wrap(self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldScalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.value == self.field.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __str__(self) -> str:
        return self.field.format(self.value)

    def __repr__(self) -> str:
        return f"FieldScalar({self.field.format(self.value)!r})"


def parse_scalar(text: str) -> FieldScalar:
    """Parse a serialized scalar: ``"a/b"``/``"a"`` (rational) or ``"r mod p"``."""
    t = text.strip()
    m = _MODULAR_RE.match(t)
    if m is not None:
        field = GF(int(m.group(2)))
        return FieldScalar(field, int(m.group(1)))
    return FieldScalar(QQ, t)
