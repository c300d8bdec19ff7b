import cmath
from fractions import Fraction

import pytest

from alphaharm.bivar import (BivarPoly, angular_derivative, d_alpha, decompose_h_over_p,
                             h_poly, homogeneous_parts, nullspace_homogeneous, p_poly,
                             p_value, s_poly, s_value)
from alphaharm.errors import DecompositionFailure, DomainError
from alphaharm.params import AlphaParam
from alphaharm.rationals import GR_I, GR_ONE, GaussianRational


def test_gaussian_rational_arithmetic():
    a = GaussianRational.of(Fraction(1, 2), Fraction(-1, 3))
    b = GaussianRational.of(2, 1)
    assert (a * b).re == Fraction(4, 3)
    assert (a * b).im == Fraction(-1, 6)
    assert (a / a) == GR_ONE
    assert a.conjugate().im == Fraction(1, 3)
    assert complex(GR_I) == 1j
    pair = a.as_json_pair()
    assert pair == ("1/2", "-1/3")
    assert GaussianRational.from_json_pair(*pair) == a


def test_poly_construction_and_degree():
    z = BivarPoly.monomial(1, 0)
    w = BivarPoly.monomial(0, 1)
    p = z * z + w * GaussianRational.of(0, 2)
    assert p.total_degree() == 2
    assert not p.is_homogeneous()
    assert BivarPoly.zero().total_degree() == -1
    assert (p - p) == BivarPoly.zero()


def test_wirtinger_derivatives():
    # d/dz and d/dzbar of z^2 zbar
    p = BivarPoly.monomial(2, 1)
    assert p.dz() == BivarPoly.monomial(1, 1) * GaussianRational.of(2, 0)
    assert p.dzbar() == BivarPoly.monomial(2, 0)


def test_p_poly_coefficients():
    # coefficients (alpha+1)_j / j! of z^(k-j) zbar^j
    a = AlphaParam.coerce(Fraction(1, 2))
    p = p_poly(a, 2)
    assert p.coefficient(2, 0) == GR_ONE
    assert p.coefficient(1, 1) == GaussianRational.of(Fraction(3, 2), 0)
    assert p.coefficient(0, 2) == GaussianRational.of(Fraction(15, 8), 0)


def test_kernel_annihilation_exact():
    for alpha in (Fraction(1, 2), Fraction(-9, 10), Fraction(3), Fraction(-7, 3)):
        a = AlphaParam.coerce(alpha)
        for k in range(0, 12):
            assert d_alpha(a, p_poly(a, k)) == BivarPoly.zero()


def test_nullspace_is_one_dimensional():
    for alpha in (Fraction(1, 2), Fraction(0), Fraction(-1, 2), Fraction(2)):
        a = AlphaParam.coerce(alpha)
        for k in range(0, 7):
            basis = nullspace_homogeneous(a, k)
            assert len(basis) == 1
            # and the basis vector is proportional to p_k: normalise at (k, 0)
            q = basis[0]
            lead = q.coefficient(k, 0)
            assert lead != GaussianRational.of(0, 0)
            scaled = q * (GR_ONE / lead)
            assert scaled == p_poly(a, k)


def test_h_poly_base_cases():
    a = AlphaParam.coerce(Fraction(1, 2))
    h0 = h_poly(a, 0)
    assert h0 == BivarPoly.one()
    h1 = h_poly(a, 1)
    # h_1 = (z + (alpha+1) zbar + i alpha) / 2
    assert h1.coefficient(1, 0) == GaussianRational.of(Fraction(1, 2), 0)
    assert h1.coefficient(0, 1) == GaussianRational.of(Fraction(3, 4), 0)
    assert h1.coefficient(0, 0) == GaussianRational.of(0, Fraction(1, 4))


def test_h_decomposition_round_trip():
    for alpha in (Fraction(1, 2), Fraction(-1, 4), Fraction(2)):
        a = AlphaParam.coerce(alpha)
        for k in (1, 2, 5, 8):
            bs = decompose_h_over_p(a, k)
            assert len(bs) == k + 1
            rebuilt = BivarPoly.zero()
            for m, b in enumerate(bs):
                if b:
                    rebuilt = rebuilt + p_poly(a, m) * b
            assert rebuilt == h_poly(a, k)


def test_h_decomposition_k1_values():
    # h_1 = (i alpha / 2) p_0 + (1/2) p_1
    a = AlphaParam.coerce(Fraction(1, 2))
    bs = decompose_h_over_p(a, 1)
    assert bs[0] == GaussianRational.of(0, Fraction(1, 4))
    assert bs[1] == GaussianRational.of(Fraction(1, 2), 0)


def test_homogeneous_parts():
    a = AlphaParam.coerce(Fraction(1, 2))
    parts = homogeneous_parts(h_poly(a, 3))
    assert [p.total_degree() for p in parts] == [0, 1, 2, 3]
    assert all(p.is_homogeneous() for p in parts)


def test_angular_derivative_monomials():
    p = BivarPoly.monomial(3, 1)
    q = angular_derivative(p)
    assert q.coefficient(3, 1) == GaussianRational.of(0, 2)


def test_geometric_sum_at_alpha_zero():
    # p_{k,0}(z) = sum z^(k-j) zbar^j; on zbar -> 1, z = x: (x^(k+1)-1)/(x-1)
    a = AlphaParam.coerce(0)
    for k in (1, 4, 9):
        p = p_poly(a, k)
        val = complex(sum(complex(p.coefficient(k - j, j)) * 2.0 ** (k - j) for j in range(k + 1)))
        expected = sum(2.0 ** (k - j) for j in range(k + 1))
        assert val == pytest.approx(expected)


def test_evaluate_and_float_shadow_agree():
    for alpha in (-0.5, 0.0, 1.5):
        a = AlphaParam.coerce(alpha)
        for k in (0, 1, 4, 9):
            p = p_poly(a, k)
            for z in (0.3 + 0.7j, -1.1 + 0.2j, 2.0 - 1.0j, 0j):
                exact = complex(p.evaluate(z))
                fast = p_value(alpha, k, z)
                assert fast == pytest.approx(exact, rel=1e-12, abs=1e-12)


def test_s_profile_relates_to_p():
    # p_k(z) = z^k s_k(zbar / z) for z != 0
    alpha = 0.75
    a = AlphaParam.coerce(alpha)
    for k in (1, 3, 6):
        for z in (0.4 + 0.9j, -1.2 - 0.3j):
            lhs = p_value(alpha, k, z)
            rhs = z ** k * s_value(alpha, k, z.conjugate() / z)
            assert lhs == pytest.approx(rhs, rel=1e-12)


def test_json_round_trip():
    a = AlphaParam.coerce(Fraction(-2, 3))
    p = h_poly(a, 4)
    q = BivarPoly.from_json_obj(p.to_json_obj())
    assert q == p


def test_decompose_requires_valid_degree():
    a = AlphaParam.coerce(Fraction(1, 2))
    with pytest.raises(DomainError):
        decompose_h_over_p(a, -1)
