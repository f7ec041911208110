"""Exact scalar fields: the rationals and prime fields GF(p) with p odd.

Rational scalars are plain :class:`fractions.Fraction` values (always in lowest
terms with a positive denominator).  Prime-field scalars are :class:`GF`
instances.  Mixing scalars from different fields raises
:class:`FieldMismatchError`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class FieldMismatchError(TypeError):
    """Scalars from two different fields met in one operation."""


class CharacteristicError(ValueError):
    """The requested field has characteristic 2."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class GF:
    """Element of the prime field GF(p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, GF):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other
        raise FieldMismatchError(f"GF({self.p}) vs {type(other).__name__}")

    def __add__(self, other):
        return GF(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return GF(self.value - self._coerce(other), self.p)

    def __rsub__(self, other):
        return GF(self._coerce(other) - self.value, self.p)

    def __mul__(self, other):
        return GF(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return GF(-self.value, self.p)

    def inverse(self) -> GF:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return GF(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other) % self.p
        if o == 0:
            raise ZeroDivisionError(f"division by 0 in GF({self.p})")
        return GF(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return GF(self._coerce(other), self.p) / self

    def __eq__(self, other):
        if isinstance(other, GF):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"GF({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class RationalField:
    """The field Q, with scalars represented as ``Fraction``."""

    char = 0
    name = "rational"

    def __call__(self, x) -> Fraction:
        if isinstance(x, GF):
            raise FieldMismatchError(f"GF({x.p}) element given to the rational field")
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def contains(self, a) -> bool:
        return isinstance(a, Fraction)

    def coerce(self, a) -> Fraction:
        """Strict conversion: ints and Fractions only."""
        if isinstance(a, Fraction):
            return a
        if isinstance(a, int):
            return Fraction(a)
        raise FieldMismatchError(f"{a!r} is not a rational scalar")

    def parse(self, s: str) -> Fraction:
        return Fraction(s.strip())

    def format(self, a: Fraction) -> str:
        return str(a)

    def to_json(self) -> dict:
        return {"type": "rational"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for an odd prime p."""

    def __init__(self, p: int):
        if p == 2:
            raise CharacteristicError("characteristic 2 is not supported")
        if not _is_prime(p):
            raise ValueError(f"{p} is not a prime")
        self.p = p
        self.char = p
        self.name = f"prime:{p}"

    def __call__(self, x) -> GF:
        if isinstance(x, GF):
            if x.p != self.p:
                raise FieldMismatchError(f"GF({x.p}) element given to GF({self.p})")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            return GF(x.numerator, self.p) / GF(x.denominator, self.p)
        if isinstance(x, int):
            return GF(x, self.p)
        raise TypeError(f"cannot convert {x!r} to GF({self.p})")

    @property
    def zero(self) -> GF:
        return GF(0, self.p)

    @property
    def one(self) -> GF:
        return GF(1, self.p)

    def contains(self, a) -> bool:
        return isinstance(a, GF) and a.p == self.p

    def coerce(self, a) -> GF:
        """Strict conversion: ints and elements of this GF(p) only."""
        if isinstance(a, GF) and a.p == self.p:
            return a
        if isinstance(a, int):
            return GF(a, self.p)
        raise FieldMismatchError(f"{a!r} is not an element of GF({self.p})")

    def parse(self, s: str) -> GF:
        return self(Fraction(s.strip()))

    def format(self, a: GF) -> str:
        return str(a.value)

    def to_json(self) -> dict:
        return {"type": "prime", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


Field = RationalField | PrimeField

QQ = RationalField()


@lru_cache(maxsize=None)
def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec: str) -> Field:
    """Parse ``"rational"`` or ``"prime:p"``."""
    spec = spec.strip().lower()
    if spec in ("rational", "q", "qq"):
        return QQ
    if spec.startswith("prime:"):
        return prime_field(int(spec.split(":", 1)[1]))
    raise ValueError(f"unknown field {spec!r}; expected 'rational' or 'prime:p'")


def field_from_json(doc: dict) -> Field:
    kind = doc.get("type")
    if kind == "rational":
        return QQ
    if kind == "prime":
        return prime_field(int(doc["p"]))
    raise ValueError(f"unknown field type {kind!r}")
