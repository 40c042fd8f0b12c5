"""The rotation indicatrix and Han's rational-RMF condition.

For A = u + vi + pj + qk the pointwise inner product <A'i, A> expands
to -(v'u - u'v - q'p + p'q); divided by sigma = |A|^2 it is the
rotation indicatrix of A.  Han's criterion asks for coprime real (a, b)
with (uv'-u'v-pq'+p'q)/sigma == (ab'-a'b)/(a^2+b^2); the left side is
exposed here as the Han fraction.  The two fractions differ exactly by
sign: indicatrix(A) == -han_fraction(A).  Both printed forms are kept,
with the exact relation asserted, rather than silently reconciling the
orientation convention.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polynomials import (QuatPoly, RationalFunction, RealPoly, gcd_real,
                          reduce_fraction)
from .quaternions import Quaternion

_I_POLY = QuatPoly([Quaternion(0, 1)])
_K_POLY = QuatPoly([Quaternion(0, 0, 0, 1)])


def inner_product_poly(a: QuatPoly) -> RealPoly:
    """<A'i, A> = -(v'u - u'v - q'p + p'q), as an exact real polynomial."""
    a = QuatPoly.of(a)
    u, v, p, q = a.components()
    du, dv, dp, dq = (u.derivative(), v.derivative(),
                      p.derivative(), q.derivative())
    return -(dv * u - du * v - dq * p + dp * q)


def han_numerator(a: QuatPoly) -> RealPoly:
    """uv' - u'v - pq' + p'q, the numerator of Han's fraction."""
    return -inner_product_poly(a)


@dataclass(frozen=True)
class IndicatrixPair:
    """<A'i, A> together with sigma and their reduced ratio."""

    numerator_inner: RealPoly
    sigma: RealPoly
    reduced: RationalFunction

    @classmethod
    def of(cls, a: QuatPoly) -> "IndicatrixPair":
        a = QuatPoly.of(a)
        if a.is_zero():
            raise ValueError("indicatrix pair of the zero polynomial")
        num = inner_product_poly(a)
        sigma = a.norm_poly()
        return cls(num, sigma, reduce_fraction(num, sigma))


def rotation_indicatrix(a: QuatPoly) -> RationalFunction:
    """Normalized component of A'i along A; defined as 0 for A = 0."""
    a = QuatPoly.of(a)
    if a.is_zero():
        return RationalFunction.zero
    return IndicatrixPair.of(a).reduced


def han_fraction(a: QuatPoly) -> RationalFunction:
    """(uv'-u'v-pq'+p'q)/(u^2+v^2+p^2+q^2), reduced.

    Equals the negation of the rotation indicatrix.
    """
    a = QuatPoly.of(a)
    if a.is_zero():
        raise ValueError("Han fraction of the zero polynomial")
    return reduce_fraction(han_numerator(a), a.norm_poly())


def omega1(a: QuatPoly) -> RationalFunction:
    """Tangent component of the ERF angular velocity: twice the Han fraction."""
    a = QuatPoly.of(a)
    if a.is_zero():
        raise ValueError("angular velocity of the zero polynomial")
    return reduce_fraction(han_numerator(a).scale(2), a.norm_poly())


def verify_han(a_poly: QuatPoly, a: RealPoly, b: RealPoly) -> bool:
    """Exact cross-multiplied test of Han's condition for certificate (a, b).

    Requires coprime (a, b) and a generator with coprime components;
    never evaluates the rational functions, so no spurious cancellation
    decisions can occur.
    """
    from .hodograph import has_coprime_components

    a_poly = QuatPoly.of(a_poly)
    a, b = RealPoly.of(a), RealPoly.of(b)
    if a_poly.is_zero():
        raise ValueError("certificate check against the zero polynomial")
    if a.is_zero() and b.is_zero():
        raise ValueError("certificate (0, 0) is not allowed")
    if gcd_real(a, b).degree() != 0:
        raise ValueError("certificate polynomials must be coprime")
    if not has_coprime_components(a_poly):
        raise ValueError("generator components must be coprime")
    lhs = (a * b.derivative() - a.derivative() * b) * a_poly.norm_poly()
    rhs = han_numerator(a_poly) * (a * a + b * b)
    return lhs == rhs


@dataclass(frozen=True)
class RhoEta:
    """The equal-degree divisibility pair and the criterion verdict."""

    rho: RealPoly
    eta: RealPoly
    divisible: bool


def rho_eta(a: QuatPoly) -> RhoEta:
    """Divisibility criterion for certificates with deg(a^2+b^2) = deg sigma.

    rho = (up'-u'p+vq'-v'q)^2 + (uq'-u'q-vp'+v'p)^2 and
    eta = (uu'+vv'+pp'+qq')^2 + (uv'-u'v-pq'+p'q)^2 satisfy
    rho + eta = sigma * (u'^2+v'^2+p'^2+q'^2), so sigma divides either
    both or neither; the verdict tests rho and asserts the other.
    """
    a = QuatPoly.of(a)
    if a.is_zero():
        raise ValueError("criterion on the zero polynomial")
    u, v, p, q = a.components()
    du, dv, dp, dq = (u.derivative(), v.derivative(),
                      p.derivative(), q.derivative())
    r1 = u * dp - du * p + v * dq - dv * q
    r2 = u * dq - du * q - v * dp + dv * p
    e1 = u * du + v * dv + p * dp + q * dq
    e2 = u * dv - du * v - p * dq + dp * q
    rho = r1 * r1 + r2 * r2
    eta = e1 * e1 + e2 * e2
    sigma = a.norm_poly()
    divisible = rho.divmod(sigma)[1].is_zero()
    if divisible != eta.divmod(sigma)[1].is_zero():
        raise AssertionError("rho/eta divisibility must agree")
    return RhoEta(rho, eta, divisible)


def indicatrix_product_residual(b: QuatPoly, a: QuatPoly) -> RealPoly:
    """Cross-multiplied residual of the product formula for indicatrices.

    residual = <(BA)'i, BA> - [(|alpha|^2-|beta|^2)<B'i, B>
               - 2<B'(alpha beta)k, B> + <A'i, A>|B|^2]
    with A = alpha + beta j; identically zero for all nonzero A, B.
    """
    a, b = QuatPoly.of(a), QuatPoly.of(b)
    if a.is_zero() or b.is_zero():
        raise ValueError("product residual needs nonzero polynomials")
    ba = b * a
    lhs = ba.derivative() * _I_POLY
    lhs = lhs.inner(ba)
    alpha, beta = a.complex_split()
    na = alpha.norm_sq()
    nb = beta.norm_sq()
    db = b.derivative()
    first = (db * _I_POLY).inner(b) * (na - nb)
    mid = (db * (alpha * beta).as_quat() * _K_POLY).inner(b).scale(2)
    last = inner_product_poly(a) * b.norm_poly()
    return lhs - (first - mid + last)
