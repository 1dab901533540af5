"""Exact scalar arithmetic over Q or a prime field, plus integer combinatorics.

Every structure constant used by the algebra modules (binomials, multinomials,
iterated divided-power multiplicities) is computed over the integers by the
helpers at the bottom of this module and only then embedded into the working
field.  Nothing in the library ever inverts a factorial inside F_p.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import DivisionByZero, MixedFields, NonIntegralQuotient

PRIME_LIMIT = 1 << 20


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class FieldSpec:
    """The base field: the rationals when ``p`` is None, otherwise F_p.

    Instances are interned via :func:`rationals` / :func:`prime_field`, so
    identity comparison is the common fast path.
    """

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None:
            if p >= PRIME_LIMIT:
                raise ValueError(f"prime moduli are capped at 2^20, got {p}")
            if not _is_prime(p):
                raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p or 0

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    def embed(self, n: int) -> "Scalar":
        """Canonical image of the integer ``n`` in this field."""
        if self.p is None:
            return Scalar(self, Fraction(n))
        return Scalar(self, n % self.p)

    def from_fraction(self, num: int, den: int) -> "Scalar":
        if den == 0:
            raise DivisionByZero("fraction with zero denominator")
        if self.p is None:
            return Scalar(self, Fraction(num, den))
        return self.embed(num) / self.embed(den)

    def zero(self) -> "Scalar":
        return self.embed(0)

    def one(self) -> "Scalar":
        return self.embed(1)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("FieldSpec", self.p))

    def __repr__(self) -> str:
        return "Q" if self.p is None else f"F{self.p}"


@lru_cache(maxsize=None)
def rationals() -> FieldSpec:
    return FieldSpec(None)


@lru_cache(maxsize=None)
def prime_field(p: int) -> FieldSpec:
    return FieldSpec(p)


class Scalar:
    """An element of Q (stored as a reduced Fraction) or of F_p (a residue)."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        self.field = field
        self.value = value

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field is self.field or other.field == self.field:
                return other
            raise MixedFields(f"cannot mix {self.field} and {other.field}")
        if isinstance(other, int):
            return self.field.embed(other)
        if isinstance(other, Fraction) and self.field.p is None:
            return Scalar(self.field, other)
        return NotImplemented

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.field.p is None:
            return Scalar(self.field, self.value + other.value)
        return Scalar(self.field, (self.value + other.value) % self.field.p)

    __radd__ = __add__

    def __neg__(self):
        if self.field.p is None:
            return Scalar(self.field, -self.value)
        return Scalar(self.field, (-self.value) % self.field.p)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.field.p is None:
            return Scalar(self.field, self.value * other.value)
        return Scalar(self.field, (self.value * other.value) % self.field.p)

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        if not self:
            raise DivisionByZero("inverse of zero")
        if self.field.p is None:
            return Scalar(self.field, 1 / self.value)
        return Scalar(self.field, pow(self.value, -1, self.field.p))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure --------------------------------------------------------

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.field!r}, {self.value!r})"


def embed_int(n: int, field: FieldSpec) -> Scalar:
    return field.embed(n)


# -- integer combinatorics -------------------------------------------------


def factorial(n: int) -> int:
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(parts) -> int:
    """(sum parts)! / prod(part!) via a product of binomials."""
    total = 0
    out = 1
    for part in parts:
        if part < 0:
            raise ValueError("multinomial parts must be nonnegative")
        total += part
        out *= math.comb(total, part)
    return out


def dp_power_coeff(m: int, n: int) -> int:
    """Multiplicity of the iterated divided power: (a^[n])^[m] = c * a^[mn].

    c = (mn)! / (m! (n!)^m); the quotient is exact, a remainder signals an
    internal bug.
    """
    if m < 0 or n < 0:
        raise ValueError("dp_power_coeff takes nonnegative arguments")
    num = math.factorial(m * n)
    den = math.factorial(m) * math.factorial(n) ** m
    q, r = divmod(num, den)
    if r:
        raise NonIntegralQuotient(f"(mn)!/(m!(n!)^m) not integral at m={m}, n={n}")
    return q
