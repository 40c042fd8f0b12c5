"""Shared deterministic generators for the property suites."""

import random
from fractions import Fraction

import pytest

from rrmf.polynomials import ComplexPoly, QuatPoly, RealPoly, gcd_real
from rrmf.quaternions import Quaternion
from rrmf.scalars import ComplexScalar, Scalar


def rand_fraction(rng: random.Random, span: int = 3,
                  denominators=(1, 1, 1, 2, 3)) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.choice(denominators))


def rand_scalar(rng: random.Random, base: int = 0) -> Scalar:
    if base and rng.random() < 0.5:
        return Scalar(rand_fraction(rng), rand_fraction(rng), base)
    return Scalar(rand_fraction(rng))


def rand_quat(rng: random.Random, base: int = 0) -> Quaternion:
    return Quaternion(*(rand_scalar(rng, base) for _ in range(4)))


def nonzero_quat(rng: random.Random, base: int = 0) -> Quaternion:
    while True:
        q = rand_quat(rng, base)
        if not q.is_zero():
            return q


def rand_qpoly(rng: random.Random, degree: int, base: int = 0) -> QuatPoly:
    coeffs = [rand_quat(rng, base) for _ in range(degree + 1)]
    return QuatPoly(coeffs)


def nonzero_qpoly(rng: random.Random, degree: int, base: int = 0) -> QuatPoly:
    while True:
        p = rand_qpoly(rng, degree, base)
        if not p.is_zero():
            return p


def rand_rpoly(rng: random.Random, degree: int) -> RealPoly:
    return RealPoly([rand_scalar(rng) for _ in range(degree + 1)])


def rand_cpoly(rng: random.Random, degree: int) -> ComplexPoly:
    return ComplexPoly([ComplexScalar(rand_scalar(rng), rand_scalar(rng))
                        for _ in range(degree + 1)])


def coprime_cpoly(rng: random.Random, degree: int) -> ComplexPoly:
    """Complex polynomial whose real and imaginary parts are coprime."""
    while True:
        p = rand_cpoly(rng, degree)
        re, im = p.real_parts()
        if p.is_zero() or (re.is_zero() and im.is_zero()):
            continue
        if gcd_real(re, im).degree() == 0:
            return p


def coprime_qpoly(rng: random.Random, degree: int, base: int = 0) -> QuatPoly:
    """Quaternion polynomial with coprime real components."""
    from rrmf.hodograph import has_coprime_components

    while True:
        p = rand_qpoly(rng, degree, base)
        if not p.is_zero() and has_coprime_components(p):
            return p


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260811)
