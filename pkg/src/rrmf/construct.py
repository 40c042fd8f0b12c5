"""Constructors for generator families with vanishing rotation indicatrix.

Covers the planar (coset-plane) family, the complete degree-3 and
degree-4 families of spatial generators, a ready-made spatial family
for every degree >= 3, and products core * delta that generate curves
with rational rotation-minimizing frames together with a verifiable
certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classify import (cancel_indicatrix, has_vanishing_indicatrix,
                       trivial_witness)
from .hodograph import core_of, has_coprime_components
from .linalg import exact_rank, min_norm_solution
from .polynomials import ComplexPoly, QuatPoly, exact_divide, gcd_complex, gcd_real
from .quaternions import Quaternion
from .scalars import Scalar

_I = Quaternion(0, 1)

_THIRD = Scalar(Fraction(1, 3))
_HALF = Scalar(Fraction(1, 2))


class ConstructionError(ValueError):
    """Constructor preconditions violated or result degenerate."""


def _in_jk_plane(q: Quaternion) -> bool:
    return q.x.is_zero()


def _jk_rank(*quats: Quaternion) -> int:
    return exact_rank([[q.y, q.z] for q in quats])


def make_trivial(left_factor: Quaternion, direction: Quaternion,
                 coeffs: list[tuple]) -> QuatPoly:
    """C * sum (x_m + y_m * u) xi^m for a plane direction u orthogonal to i.

    Always yields a vanishing indicatrix with a recoverable triviality
    witness; errors when the components of the result are not coprime.
    """
    c = Quaternion.of(left_factor)
    u = Quaternion.of(direction)
    if c.is_zero():
        raise ConstructionError("left factor must be nonzero")
    if u.is_zero() or not u.is_pure() or not u.inner(_I).is_zero():
        raise ConstructionError(
            "direction must be a nonzero pure vector orthogonal to i")
    if not coeffs:
        raise ConstructionError("at least one coefficient required")
    quats = [Quaternion.of(Scalar.of(x)) + u.scale(Scalar.of(y))
             for x, y in coeffs]
    poly = QuatPoly(quats).left_scale(c)
    if poly.is_zero() or not has_coprime_components(poly):
        raise ConstructionError("resulting components are not coprime")
    return poly


@dataclass(frozen=True)
class CubicSpec:
    """Degree-3 data: A1, A2 in R+Rj+Rk spanning it together with 1."""

    a1: Quaternion
    a2: Quaternion
    s3: Scalar = Scalar(0)
    left_factor: Quaternion = Quaternion(1)


def _forced_vector(a1: Quaternion, a2: Quaternion, i_component: Scalar
                   ) -> Quaternion:
    """The pure vector parallel to (A1 i) x (A2 i) with the given i part."""
    w = (a1 * _I).cross(a2 * _I)
    # with independent j,k parts the i component of w is their determinant
    if w.x.is_zero():
        raise ConstructionError("cross product degenerate: no forced vector")
    return w.scale(i_component / w.x)


def make_cubic(spec: CubicSpec) -> QuatPoly:
    """C (A3 xi^3 + A2 xi^2 + A1 xi + 1), the generic spatial cubic.

    The vector part of A3 is forced: parallel to (A1 i) x (A2 i) with
    i component <A1, A2 i>/3; only its scalar part s3 is free.
    """
    a1, a2 = Quaternion.of(spec.a1), Quaternion.of(spec.a2)
    c = Quaternion.of(spec.left_factor)
    if c.is_zero():
        raise ConstructionError("left factor must be nonzero")
    if not (_in_jk_plane(a1) and _in_jk_plane(a2)):
        raise ConstructionError("A1 and A2 must lie in R + Rj + Rk")
    if _jk_rank(a1, a2) != 2:
        raise ConstructionError("degenerate span: 1, A1, A2 must span R+Rj+Rk")
    a3 = Quaternion.of(Scalar.of(spec.s3)) + _forced_vector(
        a1, a2, a1.inner(a2 * _I) * _THIRD)
    poly = QuatPoly([Quaternion(1), a1, a2, a3]).left_scale(c)
    if not has_coprime_components(poly):
        raise ConstructionError("components of the result are not coprime")
    assert has_vanishing_indicatrix(poly) and trivial_witness(poly) is None
    return poly


def make_cubic_monic(a1: Quaternion, a2: Quaternion,
                     s0: Scalar = Scalar(0)) -> QuatPoly:
    """xi^3 + A2 xi^2 + A1 xi + A0 with the constant term forced.

    Mirror of the generic cubic: A0's vector part is parallel to
    (A1 i) x (A2 i) with i component -<A1, A2 i>/3.
    """
    a1, a2 = Quaternion.of(a1), Quaternion.of(a2)
    if not (_in_jk_plane(a1) and _in_jk_plane(a2)):
        raise ConstructionError("A1 and A2 must lie in R + Rj + Rk")
    if _jk_rank(a1, a2) != 2:
        raise ConstructionError("degenerate span: 1, A1, A2 must span R+Rj+Rk")
    a0 = Quaternion.of(Scalar.of(s0)) + _forced_vector(
        a1, a2, -(a1.inner(a2 * _I)) * _THIRD)
    poly = QuatPoly([a0, a1, a2, Quaternion(1)])
    if not has_coprime_components(poly):
        raise ConstructionError("components of the result are not coprime")
    assert has_vanishing_indicatrix(poly) and trivial_witness(poly) is None
    return poly


@dataclass(frozen=True)
class QuarticSpec:
    """Degree-4 data; the i part of A3 is forced, A4 is solved for."""

    a1: Quaternion
    a2: Quaternion
    a3_j: Scalar = Scalar(0)
    a3_k: Scalar = Scalar(0)
    s3: Scalar = Scalar(0)
    left_factor: Quaternion = Quaternion(1)


@dataclass(frozen=True)
class QuarticResult:
    poly: QuatPoly
    non_trivial: bool
    family_dim: int


def make_quartic(spec: QuarticSpec) -> QuarticResult:
    """C (A4 xi^4 + A3 xi^3 + A2 xi^2 + A1 xi + 1) with A4 solved exactly.

    A4 obeys four linear conditions: <A4, i> = <A1, A3 i>/2,
    <A4, A1 i> = <A2, A3 i>/3, and orthogonality to A2 i and A3 i.
    A rank-deficient system yields the minimal-norm representative and
    the family dimension.
    """
    a1, a2 = Quaternion.of(spec.a1), Quaternion.of(spec.a2)
    c = Quaternion.of(spec.left_factor)
    if c.is_zero():
        raise ConstructionError("left factor must be nonzero")
    if not (_in_jk_plane(a1) and _in_jk_plane(a2)):
        raise ConstructionError("A1 and A2 must lie in R + Rj + Rk")
    a3 = (Quaternion.of(Scalar.of(spec.s3))
          + _I.scale(a1.inner(a2 * _I) * _THIRD)
          + Quaternion(0, 0, Scalar.of(spec.a3_j), 0)
          + Quaternion(0, 0, 0, Scalar.of(spec.a3_k)))
    rows = [list(_I.components()),
            list((a1 * _I).components()),
            list((a2 * _I).components()),
            list((a3 * _I).components())]
    rhs = [a1.inner(a3 * _I) * _HALF,
           a2.inner(a3 * _I) * _THIRD,
           Scalar(0),
           Scalar(0)]
    solved = min_norm_solution(rows, rhs)
    if solved is None:
        raise ConstructionError("inconsistent linear conditions for A4")
    a4_components, family_dim = solved
    a4 = Quaternion(*a4_components)
    poly = QuatPoly([Quaternion(1), a1, a2, a3, a4]).left_scale(c)
    if not has_coprime_components(poly):
        raise ConstructionError("components of the result are not coprime")
    cond1 = _jk_rank(a1, a2) == 2
    cond2 = _jk_rank(a1, a2) == 1 and _jk_rank(a1, a2, a3) == 2
    assert has_vanishing_indicatrix(poly)
    result = QuarticResult(poly, cond1 or cond2, family_dim)
    assert (trivial_witness(poly) is None) == result.non_trivial
    return result


def make_spatial_family(n: int) -> QuatPoly:
    """(n-2) i xi^n + n k xi^(n-1) + j xi + 1: spatial, zero indicatrix, any n >= 3."""
    if n < 3:
        raise ConstructionError("family defined for degree n >= 3")
    coeffs = [Quaternion(0)] * (n + 1)
    coeffs[0] = Quaternion(1)
    coeffs[1] = Quaternion(0, 0, 1, 0)
    coeffs[n - 1] = Quaternion(0, 0, 0, n)
    coeffs[n] = coeffs[n] + Quaternion(0, n - 2, 0, 0)
    return QuatPoly(coeffs)


@dataclass(frozen=True)
class FElement:
    """Generator of an RRMF curve plus the certificate that proves it."""

    poly: QuatPoly
    certificate: ComplexPoly


def make_f_element(b0: QuatPoly, delta: ComplexPoly) -> FElement:
    """core(B0) * delta for B0 with vanishing indicatrix, with certificate.

    Writing B0 = core * mu, the certificate is conj(mu/g) * (delta/g)
    for g = gcd(mu, delta); the reduction of the output by it lands
    back in the vanishing-indicatrix class.
    """
    b0 = QuatPoly.of(b0)
    delta = ComplexPoly.of(delta)
    if not has_vanishing_indicatrix(b0):
        raise ConstructionError("B0 must have a vanishing rotation indicatrix")
    dre, dim_ = delta.real_parts()
    if delta.is_zero() or gcd_real(dre, dim_).degree() != 0:
        raise ConstructionError("delta must have coprime real components")
    dec = core_of(b0)
    mu = dec.factor
    g = gcd_complex(mu, delta)
    nu = exact_divide(mu, g).conjugate() * exact_divide(delta, g)
    poly = dec.core * delta.as_quat()
    if not has_coprime_components(poly):
        raise ConstructionError("product has non-coprime components")
    nre, nim = nu.real_parts()
    if gcd_real(nre, nim).degree() != 0:
        raise ConstructionError("degenerate certificate")
    assert cancel_indicatrix(poly, nu).vanishing
    return FElement(poly, nu)
