"""Exact arithmetic in the quadratic field Q(sqrt(d)).

Every symbolic computation in this package runs over a field Q(sqrt(d))
for a fixed squarefree base d.  A value is stored as ``a + b*sqrt(d)``
with exact ``Fraction`` parts, so equality is structural and sign
determination never touches floating point.  Pure rationals are
canonicalized to base 0 and combine freely with values of any base;
combining two genuinely irrational values of different bases is an
error rather than an implicit field extension.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

ScalarLike = Union["Scalar", Fraction, int]


class SurdBaseMismatch(ValueError):
    """Raised when two values from different quadratic fields are combined."""


def is_valid_base(d: int) -> bool:
    """A base is 0 (pure rational) or a squarefree integer >= 2."""
    if d == 0:
        return True
    if d < 2:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


def _merge_bases(d1: int, d2: int) -> int:
    if d1 == d2:
        return d1
    if d1 == 0:
        return d2
    if d2 == 0:
        return d1
    raise SurdBaseMismatch(f"cannot combine sqrt({d1}) with sqrt({d2})")


class Scalar:
    """An element a + b*sqrt(d) of Q(sqrt(d)), immutable.

    Invariants: ``a`` and ``b`` are Fractions (lowest terms, positive
    denominator, maintained by the Fraction type); ``d`` is 0 or a
    squarefree integer >= 2; and ``b == 0`` implies ``d == 0``.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a: ScalarLike = 0, b: ScalarLike = 0, d: int = 0):
        if isinstance(a, Scalar) or isinstance(b, Scalar):
            raise TypeError("use Scalar arithmetic, not nested construction")
        if not is_valid_base(d):
            raise ValueError(f"base {d} is not 0 or a squarefree integer >= 2")
        a = Fraction(a)
        b = Fraction(b)
        if b == 0:
            d = 0
        elif d == 0:
            raise ValueError("irrational part requires a nonzero base")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def of(cls, value: ScalarLike) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        return cls(Fraction(value))

    @classmethod
    def surd(cls, coefficient: ScalarLike, d: int) -> "Scalar":
        """The value coefficient * sqrt(d)."""
        return cls(0, Fraction(coefficient), d)

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(d): compares a^2 against b^2*d."""
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: the larger of a^2 and b^2*d decides
        if a * a > b * b * d:
            return 1 if a > 0 else -1
        if a * a < b * b * d:
            return 1 if b > 0 else -1
        return 0  # unreachable for squarefree d >= 2, kept as a guard

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> "Scalar":
        other = Scalar.of(other)
        d = _merge_bases(self.d, other.d)
        return Scalar(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.a, -self.b, self.d)

    def __sub__(self, other) -> "Scalar":
        return self + (-Scalar.of(other))

    def __rsub__(self, other) -> "Scalar":
        return (-self) + Scalar.of(other)

    def __mul__(self, other) -> "Scalar":
        other = Scalar.of(other)
        d = _merge_bases(self.d, other.d)
        a = self.a * other.a + self.b * other.b * d
        b = self.a * other.b + self.b * other.a
        return Scalar(a, b, d)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        if self.b == 0:
            return Scalar(1 / self.a)
        # (a + b sqrt d)^-1 = (a - b sqrt d) / (a^2 - b^2 d); the norm is
        # nonzero because sqrt(d) is irrational for squarefree d >= 2
        n = self.a * self.a - self.b * self.b * self.d
        return Scalar(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other) -> "Scalar":
        return self * Scalar.of(other).inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return Scalar.of(other) * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        result = Scalar(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.of(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __lt__(self, other) -> bool:
        return (self - Scalar.of(other)).sign() < 0

    def __le__(self, other) -> bool:
        return (self - Scalar.of(other)).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - Scalar.of(other)).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - Scalar.of(other)).sign() >= 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- conversion / text form ----------------------------------------

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def as_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return self.a

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        return format_scalar(self)


ZERO = Scalar(0)
ONE = Scalar(1)


def format_scalar(s: Scalar) -> str:
    """Canonical text form: "a/b" or "a/b+c/e*sqrt(d)" (ASCII, no spaces)."""
    a = f"{s.a.numerator}/{s.a.denominator}"
    if s.b == 0:
        return a
    sign = "+" if s.b > 0 else "-"
    c = abs(s.b)
    return f"{a}{sign}{c.numerator}/{c.denominator}*sqrt({s.d})"


_RAT = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?P<a>{_RAT})?(?:(?P<sign>(?<=.)[+-]|^[+-]?)(?P<c>\d+(?:/\d+)?)?\*?sqrt\((?P<d>\d+)\))?$"
)


def parse_scalar(text: str, expected_base: int | None = None) -> Scalar:
    """Parse the canonical text form, tolerating bare integers and
    a missing rational part ("sqrt(15)", "-3/2*sqrt(5)")."""
    text = text.strip().replace(" ", "")
    if not text:
        raise ValueError("empty scalar")
    m = _SCALAR_RE.match(text)
    if not m or (m.group("a") is None and m.group("d") is None):
        raise ValueError(f"cannot parse scalar {text!r}")
    a = Fraction(m.group("a")) if m.group("a") is not None else Fraction(0)
    if m.group("d") is None:
        result = Scalar(a)
    else:
        d = int(m.group("d"))
        c = Fraction(m.group("c")) if m.group("c") else Fraction(1)
        if m.group("sign") == "-":
            c = -c
        result = Scalar(a, c, d)
    if expected_base is not None and result.d not in (0, expected_base):
        raise SurdBaseMismatch(
            f"scalar {text!r} uses base {result.d}, document declares {expected_base}"
        )
    return result


class ComplexScalar:
    """An element of Q(sqrt(d))(i), the coefficient field of complex polynomials."""

    __slots__ = ("re", "im")

    def __init__(self, re: ScalarLike = 0, im: ScalarLike = 0):
        object.__setattr__(self, "re", Scalar.of(re))
        object.__setattr__(self, "im", Scalar.of(im))

    def __setattr__(self, name, value):
        raise AttributeError("ComplexScalar is immutable")

    @classmethod
    def of(cls, value) -> "ComplexScalar":
        if isinstance(value, ComplexScalar):
            return value
        return cls(Scalar.of(value))

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def conjugate(self) -> "ComplexScalar":
        return ComplexScalar(self.re, -self.im)

    def norm_sq(self) -> Scalar:
        return self.re * self.re + self.im * self.im

    def __add__(self, other) -> "ComplexScalar":
        other = ComplexScalar.of(other)
        return ComplexScalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "ComplexScalar":
        return ComplexScalar(-self.re, -self.im)

    def __sub__(self, other) -> "ComplexScalar":
        return self + (-ComplexScalar.of(other))

    def __rsub__(self, other) -> "ComplexScalar":
        return (-self) + ComplexScalar.of(other)

    def __mul__(self, other) -> "ComplexScalar":
        other = ComplexScalar.of(other)
        return ComplexScalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "ComplexScalar":
        n = self.norm_sq()
        if n.is_zero():
            raise ZeroDivisionError("inverse of zero complex scalar")
        return ComplexScalar(self.re / n, -self.im / n)

    def __truediv__(self, other) -> "ComplexScalar":
        return self * ComplexScalar.of(other).inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Scalar)):
            other = ComplexScalar.of(other)
        if not isinstance(other, ComplexScalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ComplexScalar({self.re}, {self.im})"
