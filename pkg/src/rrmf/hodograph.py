"""From generator polynomial to Pythagorean hodograph, speed, and core.

A quaternion polynomial A maps to the hodograph r' = A i A*, whose
components always satisfy x'^2 + y'^2 + z'^2 = sigma^2 with parametric
speed sigma = |A|^2.  The core of A is A stripped of its maximal monic
complex right divisor; A generates a primitive hodograph exactly when
it coincides with its core.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polynomials import (ComplexPoly, QuatPoly, RealPoly, exact_divide,
                          gcd_complex, gcd_real)


@dataclass(frozen=True)
class Hodograph:
    """Derivative components (x', y', z') and parametric speed sigma."""

    xp: RealPoly
    yp: RealPoly
    zp: RealPoly
    sigma: RealPoly

    def __post_init__(self):
        lhs = self.xp * self.xp + self.yp * self.yp + self.zp * self.zp
        if lhs != self.sigma * self.sigma:
            raise AssertionError("Pythagorean identity violated")
        if not self.sigma.is_zero() and self.sigma.leading().sign() < 0:
            raise AssertionError("sigma must have nonnegative leading coefficient")

    def components(self) -> tuple[RealPoly, RealPoly, RealPoly]:
        return (self.xp, self.yp, self.zp)


@dataclass(frozen=True)
class CurvePosition:
    """Antiderivatives with r(0) = 0 and the polynomial arc length."""

    x: RealPoly
    y: RealPoly
    z: RealPoly
    arclen: RealPoly

    def evaluate_float(self, xi: float) -> tuple[float, float, float]:
        return (self.x.evaluate_float(xi), self.y.evaluate_float(xi),
                self.z.evaluate_float(xi))


@dataclass(frozen=True)
class CoreDecomposition:
    """core * factor = A, with factor the maximal monic complex right divisor."""

    core: QuatPoly
    factor: ComplexPoly


def hodograph_of(a: QuatPoly) -> Hodograph:
    """r' = A i A*: ([u^2+v^2-p^2-q^2], 2[uq+vp], 2[vq-up]) with speed |A|^2."""
    a = QuatPoly.of(a)
    if a.is_zero():
        raise ValueError("hodograph of the zero polynomial")
    u, v, p, q = a.components()
    xp = u * u + v * v - p * p - q * q
    yp = (u * q + v * p).scale(2)
    zp = (v * q - u * p).scale(2)
    return Hodograph(xp, yp, zp, a.norm_poly())


def has_coprime_components(a: QuatPoly) -> bool:
    """Whether gcd of the four real components is 1."""
    a = QuatPoly.of(a)
    if a.is_zero():
        return False
    return gcd_real(*a.components()).degree() == 0


def is_primitive(a: QuatPoly) -> bool:
    """Whether the generated hodograph has coprime components.

    Tested as gcd(alpha, conj(beta)) = 1 on the complex splitting, and
    cross-checked against the real gcd of the hodograph components.
    """
    a = QuatPoly.of(a)
    if a.is_zero():
        raise ValueError("primitivity of the zero polynomial")
    alpha, beta = a.complex_split()
    primitive = gcd_complex(alpha, beta.conjugate()).degree() == 0
    h = hodograph_of(a)
    real_check = gcd_real(h.xp, h.yp, h.zp).degree() == 0
    if primitive != real_check:
        raise AssertionError("primitivity cross-check failed")
    return primitive


def core_of(a: QuatPoly) -> CoreDecomposition:
    """Strip the maximal monic complex right divisor gcd(alpha, conj(beta))."""
    a = QuatPoly.of(a)
    if a.is_zero():
        raise ValueError("core of the zero polynomial")
    alpha, beta = a.complex_split()
    chi = gcd_complex(alpha, beta.conjugate())
    core = exact_divide(a, chi.as_quat())
    return CoreDecomposition(core, chi)


def integrate(h: Hodograph) -> CurvePosition:
    """Exact antiderivatives with zero integration constants."""
    return CurvePosition(h.xp.antiderivative(), h.yp.antiderivative(),
                         h.zp.antiderivative(), h.sigma.antiderivative())
