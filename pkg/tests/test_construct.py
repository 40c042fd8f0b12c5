from fractions import Fraction

import numpy as np
import pytest

from rrmf.catalog import (nontrivial_cubic, nontrivial_quartic_dense,
                          nontrivial_quartic_sparse, quintic_left_cancellation)
from rrmf.classify import (MembershipStatus, has_vanishing_indicatrix,
                           indicatrix_coefficients, rrmf_membership,
                           trivial_witness)
from rrmf.construct import (ConstructionError, CubicSpec, QuarticSpec,
                            make_cubic, make_cubic_monic, make_f_element,
                            make_quartic, make_spatial_family, make_trivial)
from rrmf.hodograph import core_of
from rrmf.indicatrix import inner_product_poly
from rrmf.polynomials import ComplexPoly, QuatPoly, RealPoly
from rrmf.quaternions import I, J, K, Quaternion
from rrmf.scalars import Scalar

from conftest import nonzero_quat

XI_PLUS_I = ComplexPoly.from_parts(RealPoly([0, 1]), RealPoly([1]))


def rand_jk(rng):
    return Quaternion(rng.randint(-3, 3), 0, rng.randint(-3, 3), rng.randint(-3, 3))


def test_make_trivial_examples():
    poly = make_trivial(Quaternion(1), J, [(1, 0), (0, 1)])
    assert poly == QuatPoly([Quaternion(1), J])
    assert has_vanishing_indicatrix(poly)
    assert trivial_witness(poly) is not None

    deg2 = make_trivial(Quaternion(1, 1, 0, 0), K, [(1, 0), (2, 1), (0, 3)])
    assert has_vanishing_indicatrix(deg2)
    assert trivial_witness(deg2) is not None


def test_make_trivial_errors():
    with pytest.raises(ConstructionError):
        make_trivial(Quaternion(0), J, [(1, 0)])
    with pytest.raises(ConstructionError):
        make_trivial(Quaternion(1), I, [(1, 0), (0, 1)])  # direction along i
    with pytest.raises(ConstructionError):
        make_trivial(Quaternion(1), Quaternion(1, 0, 1, 0), [(1, 0)])  # not pure
    with pytest.raises(ConstructionError):
        # components (1 + 2 xi, 0, 0, 0) share the factor 1 + 2 xi
        make_trivial(Quaternion(1), J, [(1, 0), (2, 0)])


def test_make_cubic_reproduces_catalog():
    assert make_cubic(CubicSpec(K, J)) == nontrivial_cubic()


def test_make_cubic_random_specs(rng):
    built = 0
    while built < 30:
        a1, a2 = rand_jk(rng), rand_jk(rng)
        s3 = Scalar(rng.randint(-2, 2))
        c = nonzero_quat(rng)
        try:
            poly = make_cubic(CubicSpec(a1, a2, s3, c))
        except ConstructionError:
            continue
        built += 1
        assert indicatrix_coefficients(poly).all_zero()
        assert has_vanishing_indicatrix(poly)
        assert trivial_witness(poly) is None


def test_make_cubic_errors():
    with pytest.raises(ConstructionError):
        make_cubic(CubicSpec(J, J.scale(2)))  # rank-2 span
    with pytest.raises(ConstructionError):
        make_cubic(CubicSpec(I, J))  # A1 outside R+Rj+Rk
    with pytest.raises(ConstructionError):
        make_cubic(CubicSpec(K, J, left_factor=Quaternion(0)))


def test_make_cubic_monic_sign():
    poly = make_cubic_monic(K, J)
    assert poly.coeffs[3] == Quaternion(1)
    assert poly.coeffs[0] == Quaternion(0, Fraction(1, 3))  # sign flip vs non-monic
    assert has_vanishing_indicatrix(poly)
    assert trivial_witness(poly) is None
    with pytest.raises(ConstructionError):
        make_cubic_monic(Quaternion(0), J)


def test_make_quartic_reproduces_sparse():
    result = make_quartic(QuarticSpec(J, Quaternion(0), a3_k=Scalar(4)))
    assert result.poly == nontrivial_quartic_sparse()
    assert result.non_trivial
    assert result.family_dim == 1  # A2 = 0 leaves the scalar part free


def test_make_quartic_reproduces_dense():
    result = make_quartic(QuarticSpec(J, K, a3_j=Scalar(1)))
    assert result.poly == nontrivial_quartic_dense()
    assert result.non_trivial
    assert result.family_dim == 0


def test_make_quartic_random_specs(rng):
    built = 0
    while built < 30:
        spec = QuarticSpec(rand_jk(rng), rand_jk(rng),
                           Scalar(rng.randint(-2, 2)), Scalar(rng.randint(-2, 2)),
                           Scalar(rng.randint(-2, 2)))
        try:
            result = make_quartic(spec)
        except ConstructionError:
            continue
        built += 1
        assert has_vanishing_indicatrix(result.poly)
        assert (trivial_witness(result.poly) is None) == result.non_trivial


def test_make_quartic_rank_deficient():
    result = make_quartic(QuarticSpec(Quaternion(0), Quaternion(0),
                                      a3_j=Scalar(1)))
    assert result.family_dim == 2
    assert not result.non_trivial
    assert has_vanishing_indicatrix(result.poly)


def test_make_spatial_family():
    assert make_spatial_family(3) == QuatPoly([Quaternion(1), J, K.scale(3), I])
    n5 = make_spatial_family(5)
    assert n5.coeffs[5] == Quaternion(0, 3) and n5.coeffs[4] == Quaternion(0, 0, 0, 5)
    assert inner_product_poly(n5).is_zero()
    with pytest.raises(ConstructionError):
        make_spatial_family(2)


def test_make_f_element_primitive_base():
    cubic = nontrivial_cubic()
    element = make_f_element(cubic, ComplexPoly.of(1))
    assert element.poly == cubic
    assert element.certificate == ComplexPoly.of(1)

    element = make_f_element(cubic, XI_PLUS_I)
    assert element.poly == cubic * XI_PLUS_I.as_quat()
    assert element.certificate == XI_PLUS_I
    m = rrmf_membership(element.poly, element.certificate)
    assert m.status is MembershipStatus.PROVEN


def test_make_f_element_exercises_gcd_weight():
    # base with vanishing indicatrix but a nontrivial core factor mu:
    # ex1-generator * ((xi-2) + i) cancels the indicatrix of the quintic
    ex1 = quintic_left_cancellation().generator
    mu = ComplexPoly.from_parts(RealPoly([-2, 1]), RealPoly([1]))
    b0 = ex1 * mu.as_quat()
    assert has_vanishing_indicatrix(b0)
    dec = core_of(b0)
    assert dec.core == ex1 and dec.factor == mu.monic()

    delta = XI_PLUS_I
    element = make_f_element(b0, delta)
    assert element.poly == ex1 * delta.as_quat()
    m = rrmf_membership(element.poly, element.certificate)
    assert m.status is MembershipStatus.PROVEN

    # delta sharing a factor with mu exercises the gcd weight
    element = make_f_element(b0, mu.monic())
    assert element.certificate.degree() == 0
    m = rrmf_membership(element.poly, element.certificate)
    assert m.status is MembershipStatus.PROVEN


def test_make_f_element_requires_vanishing_base():
    with pytest.raises(ConstructionError):
        make_f_element(QuatPoly([Quaternion(1), I]), XI_PLUS_I)


def test_trivial_family_dimension_counts():
    # numeric rank of the parametrization jacobian: 2n + 5 at degree n
    for n, expected in ((3, 11), (4, 13)):
        rank = _trivial_family_jacobian_rank(n, seed=5)
        assert rank == expected


def _hamilton(a, b):
    return np.array([
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ])


def _trivial_family_jacobian_rank(n: int, seed: int) -> int:
    rng = np.random.RandomState(seed)
    point = rng.standard_normal(5 + 2 * (n + 1))

    def embed(params):
        c = params[:4]
        t = params[4]
        out = []
        for m in range(n + 1):
            x, y = params[5 + 2 * m], params[6 + 2 * m]
            coeff = np.array([x, 0.0, y * np.cos(t), y * np.sin(t)])
            out.extend(_hamilton(c, coeff))
        return np.array(out)

    h = 1e-6
    cols = []
    for idx in range(len(point)):
        e = np.zeros(len(point))
        e[idx] = h
        cols.append((embed(point + e) - embed(point - e)) / (2 * h))
    jac = np.stack(cols, axis=1)
    singular = np.linalg.svd(jac, compute_uv=False)
    return int(np.sum(singular > 1e-8))
