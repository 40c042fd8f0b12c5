"""Univariate polynomials over the exact scalar field.

Three dense coefficient types (real, complex, quaternion) share the
ascending-coefficient representation with no trailing zeros, so the
zero polynomial is the empty tuple and ``degree() == -1`` for it.
Quaternion polynomials multiply with ordered coefficients; real and
complex ones form Euclidean domains with monic gcds.  Reduced ratios
of real polynomials (monic denominator, coprime parts) provide the
canonical form for every rational function in the package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .quaternions import Quaternion
from .scalars import ComplexScalar, Scalar


class InexactDivision(ArithmeticError):
    """Division that was required to be exact left a remainder."""


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return tuple(coeffs)


def _convolve(a: Sequence, b: Sequence, zero):
    if not a or not b:
        return []
    out = [zero] * (len(a) + len(b) - 1)
    for r, ar in enumerate(a):
        for s, bs in enumerate(b):
            out[r + s] = out[r + s] + ar * bs
    return out


def _term_str(c, k: int) -> str:
    if k == 0:
        return f"{c}"
    xi = "xi" if k == 1 else f"xi^{k}"
    return f"({c})*{xi}"


class RealPoly:
    """Polynomial with Scalar coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(
            self, "coeffs", _trim([Scalar.of(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("RealPoly is immutable")

    @classmethod
    def of(cls, value) -> "RealPoly":
        if isinstance(value, RealPoly):
            return value
        if isinstance(value, (Scalar, Fraction, int)):
            return cls([Scalar.of(value)])
        return cls(value)

    @classmethod
    def monomial(cls, c, k: int) -> "RealPoly":
        return cls([0] * k + [c])

    zero_coeff = Scalar(0)
    one_coeff = Scalar(1)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Scalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.zero_coeff

    def __add__(self, other) -> "RealPoly":
        other = RealPoly.of(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RealPoly([self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "RealPoly":
        return RealPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "RealPoly":
        return self + (-RealPoly.of(other))

    def __rsub__(self, other) -> "RealPoly":
        return (-self) + RealPoly.of(other)

    def __mul__(self, other) -> "RealPoly":
        other = RealPoly.of(other)
        return RealPoly(_convolve(self.coeffs, other.coeffs, self.zero_coeff))

    __rmul__ = __mul__

    def scale(self, s) -> "RealPoly":
        s = Scalar.of(s)
        return RealPoly([c * s for c in self.coeffs])

    def derivative(self) -> "RealPoly":
        return RealPoly([self.coeffs[k] * k for k in range(1, len(self.coeffs))])

    def antiderivative(self) -> "RealPoly":
        """Termwise antiderivative with zero constant term."""
        out = [Scalar(0)]
        out += [c * Fraction(1, k + 1) for k, c in enumerate(self.coeffs)]
        return RealPoly(out)

    def monic(self) -> "RealPoly":
        if self.is_zero():
            return self
        return self.scale(self.leading().inverse())

    def divmod(self, divisor: "RealPoly") -> tuple["RealPoly", "RealPoly"]:
        divisor = RealPoly.of(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [self.zero_coeff] * max(0, self.degree() - divisor.degree() + 1)
        r = list(self.coeffs)
        inv_lead = divisor.leading().inverse()
        dd = divisor.degree()
        while True:
            r = list(_trim(r))
            if len(r) - 1 < dd:
                break
            c = r[-1] * inv_lead
            k = len(r) - 1 - dd
            q[k] = q[k] + c
            for s, ds in enumerate(divisor.coeffs):
                r[k + s] = r[k + s] - c * ds
        return RealPoly(q), RealPoly(r)

    def __mod__(self, other) -> "RealPoly":
        return self.divmod(other)[1]

    def evaluate(self, xi) -> Scalar:
        acc = Scalar(0)
        for c in reversed(self.coeffs):
            acc = acc * Scalar.of(xi) + c
        return acc

    def evaluate_float(self, xi: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * xi + float(c)
        return acc

    def float_coeffs(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    def __eq__(self, other) -> bool:
        if isinstance(other, (Scalar, Fraction, int)):
            other = RealPoly.of(other)
        if not isinstance(other, RealPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"RealPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        return " + ".join(_term_str(c, k)
                          for k, c in enumerate(self.coeffs) if not c.is_zero())

    def as_complex(self) -> "ComplexPoly":
        return ComplexPoly([ComplexScalar(c) for c in self.coeffs])

    def as_quat(self) -> "QuatPoly":
        return QuatPoly([Quaternion(c) for c in self.coeffs])


class ComplexPoly:
    """Polynomial with ComplexScalar coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(
            self, "coeffs", _trim([ComplexScalar.of(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("ComplexPoly is immutable")

    @classmethod
    def of(cls, value) -> "ComplexPoly":
        if isinstance(value, ComplexPoly):
            return value
        if isinstance(value, RealPoly):
            return value.as_complex()
        if isinstance(value, (ComplexScalar, Scalar, Fraction, int)):
            return cls([ComplexScalar.of(value)])
        return cls(value)

    @classmethod
    def from_parts(cls, re: RealPoly, im: RealPoly) -> "ComplexPoly":
        re, im = RealPoly.of(re), RealPoly.of(im)
        n = max(len(re.coeffs), len(im.coeffs))
        return cls([ComplexScalar(re.coeff(k), im.coeff(k)) for k in range(n)])

    zero_coeff = ComplexScalar(0)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> ComplexScalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> ComplexScalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.zero_coeff

    def real_parts(self) -> tuple[RealPoly, RealPoly]:
        return (RealPoly([c.re for c in self.coeffs]),
                RealPoly([c.im for c in self.coeffs]))

    def __add__(self, other) -> "ComplexPoly":
        other = ComplexPoly.of(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ComplexPoly([self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "ComplexPoly":
        return ComplexPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "ComplexPoly":
        return self + (-ComplexPoly.of(other))

    def __rsub__(self, other) -> "ComplexPoly":
        return (-self) + ComplexPoly.of(other)

    def __mul__(self, other) -> "ComplexPoly":
        other = ComplexPoly.of(other)
        return ComplexPoly(_convolve(self.coeffs, other.coeffs, self.zero_coeff))

    __rmul__ = __mul__

    def scale(self, s) -> "ComplexPoly":
        s = ComplexScalar.of(s)
        return ComplexPoly([c * s for c in self.coeffs])

    def conjugate(self) -> "ComplexPoly":
        return ComplexPoly([c.conjugate() for c in self.coeffs])

    def derivative(self) -> "ComplexPoly":
        return ComplexPoly([self.coeffs[k] * Scalar.of(k)
                            for k in range(1, len(self.coeffs))])

    def norm_sq(self) -> RealPoly:
        """|gamma|^2 = gamma * conj(gamma) as a real polynomial."""
        prod = self * self.conjugate()
        re, im = prod.real_parts()
        if not im.is_zero():
            raise AssertionError("norm of a complex polynomial must be real")
        return re

    def monic(self) -> "ComplexPoly":
        if self.is_zero():
            return self
        return self.scale(self.leading().inverse())

    def divmod(self, divisor: "ComplexPoly") -> tuple["ComplexPoly", "ComplexPoly"]:
        divisor = ComplexPoly.of(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [self.zero_coeff] * max(0, self.degree() - divisor.degree() + 1)
        r = list(self.coeffs)
        inv_lead = divisor.leading().inverse()
        dd = divisor.degree()
        while True:
            r = list(_trim(r))
            if len(r) - 1 < dd:
                break
            c = r[-1] * inv_lead
            k = len(r) - 1 - dd
            q[k] = q[k] + c
            for s, ds in enumerate(divisor.coeffs):
                r[k + s] = r[k + s] - c * ds
        return ComplexPoly(q), ComplexPoly(r)

    def evaluate(self, xi) -> ComplexScalar:
        acc = ComplexScalar(0)
        for c in reversed(self.coeffs):
            acc = acc * ComplexScalar.of(Scalar.of(xi)) + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, (ComplexScalar, Scalar, Fraction, int, RealPoly)):
            other = ComplexPoly.of(other)
        if not isinstance(other, ComplexPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"ComplexPoly({[(str(c.re), str(c.im)) for c in self.coeffs]})"

    def as_quat(self) -> "QuatPoly":
        return QuatPoly([Quaternion(c.re, c.im) for c in self.coeffs])


class QuatPoly:
    """Quaternion polynomial u + v*i + p*j + q*k with ordered products."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(
            self, "coeffs", _trim([Quaternion.of(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("QuatPoly is immutable")

    @classmethod
    def of(cls, value) -> "QuatPoly":
        if isinstance(value, QuatPoly):
            return value
        if isinstance(value, RealPoly):
            return value.as_quat()
        if isinstance(value, ComplexPoly):
            return value.as_quat()
        if isinstance(value, (Quaternion, ComplexScalar, Scalar, Fraction, int)):
            return cls([Quaternion.of(value)])
        return cls(value)

    @classmethod
    def from_components(cls, u, v, p, q) -> "QuatPoly":
        u, v = RealPoly.of(u), RealPoly.of(v)
        p, q = RealPoly.of(p), RealPoly.of(q)
        n = max(len(u.coeffs), len(v.coeffs), len(p.coeffs), len(q.coeffs))
        return cls([Quaternion(u.coeff(k), v.coeff(k), p.coeff(k), q.coeff(k))
                    for k in range(n)])

    @classmethod
    def from_complex_pair(cls, alpha: ComplexPoly, beta: ComplexPoly) -> "QuatPoly":
        """alpha + beta*j."""
        ar, ai = ComplexPoly.of(alpha).real_parts()
        br, bi = ComplexPoly.of(beta).real_parts()
        return cls.from_components(ar, ai, br, bi)

    zero_coeff = Quaternion(0)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Quaternion:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Quaternion:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.zero_coeff

    def components(self) -> tuple[RealPoly, RealPoly, RealPoly, RealPoly]:
        """(u, v, p, q) with self = u + v*i + p*j + q*k."""
        return (RealPoly([c.w for c in self.coeffs]),
                RealPoly([c.x for c in self.coeffs]),
                RealPoly([c.y for c in self.coeffs]),
                RealPoly([c.z for c in self.coeffs]))

    def complex_split(self) -> tuple[ComplexPoly, ComplexPoly]:
        """(alpha, beta) with self = alpha + beta*j."""
        u, v, p, q = self.components()
        return (ComplexPoly.from_parts(u, v), ComplexPoly.from_parts(p, q))

    def __add__(self, other) -> "QuatPoly":
        other = QuatPoly.of(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QuatPoly([self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "QuatPoly":
        return QuatPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "QuatPoly":
        return self + (-QuatPoly.of(other))

    def __rsub__(self, other) -> "QuatPoly":
        return (-self) + QuatPoly.of(other)

    def __mul__(self, other) -> "QuatPoly":
        """Coefficient convolution with ordered quaternion products."""
        other = QuatPoly.of(other)
        return QuatPoly(_convolve(self.coeffs, other.coeffs, self.zero_coeff))

    def __rmul__(self, other) -> "QuatPoly":
        return QuatPoly.of(other) * self

    def left_scale(self, c: Quaternion) -> "QuatPoly":
        c = Quaternion.of(c)
        return QuatPoly([c * a for a in self.coeffs])

    def right_scale(self, c: Quaternion) -> "QuatPoly":
        c = Quaternion.of(c)
        return QuatPoly([a * c for a in self.coeffs])

    def conjugate(self) -> "QuatPoly":
        return QuatPoly([c.conjugate() for c in self.coeffs])

    def derivative(self) -> "QuatPoly":
        return QuatPoly([self.coeffs[k].scale(k)
                         for k in range(1, len(self.coeffs))])

    def norm_poly(self) -> RealPoly:
        """u^2 + v^2 + p^2 + q^2, the squared pointwise norm."""
        u, v, p, q = self.components()
        return u * u + v * v + p * p + q * q

    def inner(self, other: "QuatPoly") -> RealPoly:
        """Pointwise Euclidean inner product, as a real polynomial."""
        other = QuatPoly.of(other)
        if self.is_zero() or other.is_zero():
            return RealPoly()
        out = [Scalar(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for r, ar in enumerate(self.coeffs):
            for s, bs in enumerate(other.coeffs):
                out[r + s] = out[r + s] + ar.inner(bs)
        return RealPoly(out)

    def right_divmod(self, divisor: "QuatPoly") -> tuple["QuatPoly", "QuatPoly"]:
        """Q, R with self = Q*divisor + R and deg R < deg divisor."""
        divisor = QuatPoly.of(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q: list[Quaternion] = [self.zero_coeff] * max(
            0, self.degree() - divisor.degree() + 1)
        r = list(self.coeffs)
        inv_lead = divisor.leading().inverse()
        dd = divisor.degree()
        while True:
            r = list(_trim(r))
            if len(r) - 1 < dd:
                break
            c = r[-1] * inv_lead
            k = len(r) - 1 - dd
            q[k] = q[k] + c
            for s, ds in enumerate(divisor.coeffs):
                r[k + s] = r[k + s] - c * ds
        return QuatPoly(q), QuatPoly(r)

    def evaluate(self, xi) -> Quaternion:
        acc = Quaternion(0)
        s = Scalar.of(xi)
        for c in reversed(self.coeffs):
            acc = acc.scale(s) + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, (Quaternion, ComplexScalar, Scalar, Fraction, int,
                              RealPoly, ComplexPoly)):
            other = QuatPoly.of(other)
        if not isinstance(other, QuatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"QuatPoly({self.coeffs!r})"


PolyKind = Union[RealPoly, ComplexPoly, QuatPoly]


def poly_derivative(p: PolyKind) -> PolyKind:
    """Formal derivative for any coefficient kind."""
    return p.derivative()


def gcd_real(*polys) -> RealPoly:
    """Monic gcd of real polynomials via the Euclidean algorithm."""
    polys = [RealPoly.of(p) for p in polys]
    if all(p.is_zero() for p in polys):
        raise ValueError("gcd of all-zero polynomials is undefined")
    g = RealPoly()
    for p in polys:
        g = _gcd2_real(g, p)
    return g.monic()


def _gcd2_real(a: RealPoly, b: RealPoly) -> RealPoly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a


def gcd_complex(*polys) -> ComplexPoly:
    """Monic gcd of complex polynomials via the Euclidean algorithm."""
    polys = [ComplexPoly.of(p) for p in polys]
    if all(p.is_zero() for p in polys):
        raise ValueError("gcd of all-zero polynomials is undefined")
    g = ComplexPoly()
    for p in polys:
        g = _gcd2_complex(g, p)
    return g.monic()


def _gcd2_complex(a: ComplexPoly, b: ComplexPoly) -> ComplexPoly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a


def exact_divide(p: PolyKind, divisor) -> PolyKind:
    """Quotient of an exact division; raises InexactDivision on remainder.

    Quaternion polynomials divide on the right: returns Q with p = Q*divisor.
    """
    if isinstance(p, QuatPoly):
        q, r = p.right_divmod(QuatPoly.of(divisor))
    elif isinstance(p, ComplexPoly):
        q, r = p.divmod(ComplexPoly.of(divisor))
    elif isinstance(p, RealPoly):
        q, r = p.divmod(RealPoly.of(divisor))
    else:
        raise TypeError(f"cannot divide {type(p).__name__}")
    if not r.is_zero():
        raise InexactDivision(f"remainder {r!r} in exact division")
    return q


class RationalFunction:
    """Reduced ratio of real polynomials: monic denominator, coprime parts."""

    __slots__ = ("num", "den")

    def __init__(self, num: RealPoly, den: RealPoly, _reduced: bool = False):
        num, den = RealPoly.of(num), RealPoly.of(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                num, den = RealPoly(), RealPoly([1])
            else:
                g = gcd_real(num, den)
                num = exact_divide(num, g)
                den = exact_divide(den, g)
                lead = den.leading().inverse()
                num, den = num.scale(lead), den.scale(lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def of(cls, value) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        return cls(RealPoly.of(value), RealPoly([1]))

    zero: "RationalFunction"

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other) -> "RationalFunction":
        other = RationalFunction.of(other)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-RationalFunction.of(other))

    def __rsub__(self, other) -> "RationalFunction":
        return (-self) + RationalFunction.of(other)

    def __mul__(self, other) -> "RationalFunction":
        other = RationalFunction.of(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = RationalFunction.of(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den)

    def evaluate_float(self, xi: float) -> float:
        return self.num.evaluate_float(xi) / self.den.evaluate_float(xi)

    def evaluate(self, xi) -> Scalar:
        return self.num.evaluate(xi) / self.den.evaluate(xi)

    def __eq__(self, other) -> bool:
        if isinstance(other, (RealPoly, Scalar, Fraction, int)):
            other = RationalFunction.of(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"RationalFunction(({self.num}) / ({self.den}))"


RationalFunction.zero = RationalFunction(RealPoly(), RealPoly([1]), _reduced=True)


def reduce_fraction(num, den) -> RationalFunction:
    """Canonical reduced form of num/den; errors on a zero denominator."""
    return RationalFunction(RealPoly.of(num), RealPoly.of(den))
