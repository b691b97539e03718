"""Smoke tests for the python bindings: exactness across the boundary and a
few end-to-end numbers against the standard library."""

import math
from fractions import Fraction

import pytest

import stirlab


def test_bernoulli_exact_fractions():
    assert stirlab.bernoulli(0) == Fraction(1)
    assert stirlab.bernoulli(1) == Fraction(-1, 2)
    assert stirlab.bernoulli(12) == Fraction(-691, 2730)
    assert stirlab.bernoulli(13) == 0
    assert isinstance(stirlab.bernoulli(12), Fraction)


def test_binomial_is_arbitrary_precision():
    assert stirlab.binomial(4, 2) == 6
    assert stirlab.binomial(200, 100) == math.comb(200, 100)


def test_zeta_even_coefficient():
    assert stirlab.zeta_even_coefficient(1) == Fraction(1, 6)
    assert stirlab.zeta_even_coefficient(2) == Fraction(1, 90)


def test_log_gamma_corrected_matches_math_lgamma():
    for x in (10.0, 15.0, 21.0, 50.0):
        report = stirlab.log_gamma_corrected(x)
        assert report["value"] == pytest.approx(math.lgamma(x), abs=1e-10)
        assert report["abs_error"] <= 1e-10


def test_flaw_is_half_log_x():
    assert stirlab.discrepancy(math.e**2) == pytest.approx(1.0, rel=1e-13)
    report = stirlab.log_gamma_euler(10.0)
    assert report["value"] - math.lgamma(10.0) == pytest.approx(
        0.5 * math.log(10.0), abs=1e-10
    )


def test_factor_series_coefficients():
    assert stirlab.factor_series_coefficients(3) == [
        Fraction(1),
        Fraction(1, 12),
        Fraction(1, 288),
        Fraction(-139, 51840),
    ]


def test_optimal_truncation():
    assert stirlab.optimal_truncation([0.1, 0.01, 0.001, 0.01, 0.1]) == 3
    assert stirlab.optimal_truncation(stirlab.stirling_terms(1.0, 15)) == 4


def test_em_sum_against_direct():
    em = stirlab.em_sum("x^2", 1, 100, order=4)
    direct = stirlab.sum_direct("x^2", 1, 100)
    assert direct == 338350.0
    assert em == pytest.approx(direct, abs=1e-9)


def test_em_antidifference_flawed_branch():
    x = 10.0
    full = stirlab.em_antidifference("log", x, order=7)
    flawed = stirlab.em_antidifference("log", x, order=7, include_constant_term=False)
    assert flawed - full == pytest.approx(0.5 * math.log(x), abs=1e-12)


def test_polynomial_roots():
    roots = stirlab.polynomial_roots([1, 0, 1])  # z^2 + 1
    assert len(roots) == 2
    (r0, m0), (r1, m1) = roots
    assert (m0, m1) == (1, 1)
    assert r0 == pytest.approx(-1j, abs=1e-12)
    assert r1 == pytest.approx(1j, abs=1e-12)


def test_reduce_difference_to_differential():
    coeffs = stirlab.reduce_difference_to_differential(["-1", "1"], 4)
    assert coeffs == [0, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24)]


def test_resummation_identity():
    lhs, rhs = stirlab.resum_term_check(0, 1.0)
    assert rhs == pytest.approx(1.0 / 12.0, rel=1e-15)
    assert lhs == pytest.approx(rhs, rel=1e-12)
    assert stirlab.paired_mode_real(1, 10.0, 1) == pytest.approx(
        1.0 / (20.0 * math.pi**2), rel=1e-13
    )


def test_oracles():
    value, err, method = stirlab.lgamma_ref(50.0)
    assert method == "exact-factorial"
    assert value == pytest.approx(math.lgamma(50.0), abs=1e-12)

    zvalue, zbound, zmethod = stirlab.zeta_direct(2.0, 10**6)
    assert zmethod == "direct-sum"
    assert abs(zvalue - math.pi**2 / 6.0) <= zbound


def test_expm1_zeros():
    zeros = stirlab.expm1_zeros(2)
    assert zeros[0] == 0
    assert zeros[1] == pytest.approx(2j * math.pi, abs=1e-15)
    assert zeros[2] == pytest.approx(-2j * math.pi, abs=1e-15)


def test_domain_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        stirlab.discrepancy(0.0)
    with pytest.raises(ValueError):
        stirlab.em_sum("no-such-function", 1, 10)
