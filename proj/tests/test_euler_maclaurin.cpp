#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "stirlab/euler_maclaurin.hpp"
#include "stirlab/oracle.hpp"

using namespace stirlab;

TEST_CASE("inverse_shift_coefficients: the classical expansion") {
  // (e^D - 1)^{-1} = D^{-1} - 1/2 + D/12 + 0 D^2 - D^3/720 + ...
  const InverseShiftExpansion e = inverse_shift_coefficients(3);
  CHECK(e.antiderivative_coefficient == 1);
  CHECK(e.constant_coefficient == Rational(-1, 2));
  REQUIRE(e.derivative_coefficients.size() == 3);
  CHECK(e.derivative_coefficients[0] == Rational(1, 12));
  CHECK(e.derivative_coefficients[1] == 0);
  CHECK(e.derivative_coefficients[2] == Rational(-1, 720));

  const InverseShiftExpansion e0 = inverse_shift_coefficients(0);
  CHECK(e0.derivative_coefficients.empty());
  CHECK(e0.constant_coefficient == Rational(-1, 2));

  // D^5 coefficient = B_6/6! = (1/42)/720 = 1/30240.
  const InverseShiftExpansion e5 = inverse_shift_coefficients(5);
  CHECK(e5.derivative_coefficients[4] == Rational(1, 30240));

  // Coefficient of D^(n-1) is B_n/n! for every housed n.
  Rational fact = 1;
  for (unsigned j = 1; j <= 5; ++j) {
    fact *= Rational(j + 1);
    CHECK(e5.derivative_coefficients[j - 1] == bernoulli(j + 1) / fact);
  }
}

TEST_CASE("em_antidifference: trivially terminating cases") {
  // g = 1 at x = 3: F = x - 1/2 = 2.5, and F(4) - F(3) = 1 exactly.
  const SmoothFunction one = sf_one();
  CHECK(em_antidifference(one, 3.0, 3) == doctest::Approx(2.5).epsilon(1e-16));
  CHECK(em_antidifference(one, 4.0, 3) - em_antidifference(one, 3.0, 3) == 1.0);

  // g = x at x = 0: F = x^2/2 - x/2 + 1/12 -> 1/12.
  const SmoothFunction iden = sf_identity();
  CHECK(em_antidifference(iden, 0.0, 3) == doctest::Approx(1.0 / 12.0).epsilon(1e-16));
}

TEST_CASE("em_antidifference: g = log at x = 10 order 7 vs log Gamma(10) - log sqrt(2 pi)") {
  // Frozen oracle: log(9!) = 12.801827480081469, 0.5 log(2 pi) = 0.9189385332046728;
  // first omitted term (B_10/(9*10) x^-9) = 8.418e-13 bounds the defect.
  const double f = em_antidifference(sf_log(), 10.0, 7);
  const double target = 12.801827480081469 - 0.9189385332046728;
  CHECK(std::abs(f - target) <= 8.5e-13);
}

TEST_CASE("em_sum: counting and polynomial examples") {
  CHECK(em_sum(sf_one(), 1, 10, 3) == doctest::Approx(10.0).epsilon(1e-15));
  // sum k^2, k = 1..100 = 100*101*201/6 = 338350, exact float arithmetic.
  CHECK(em_sum(sf_square(), 1, 100, 3) == doctest::Approx(338350.0).epsilon(1e-13));
  CHECK_THROWS_AS(em_sum(sf_one(), 5, 4, 3), std::domain_error);
}

TEST_CASE("em_sum: harmonic numbers carry the endpoint truncation floor") {
  // The asymptotic series cannot beat its smallest term at the lower endpoint
  // a = 1: the order-5 defect against direct summation is +1.7525890667e-3
  // (frozen from a 60-digit scratch oracle).  This documents the floor; the
  // em_sum value is NOT within 1e-12 of the direct sum and cannot be.
  const double direct = sum_direct(sf_reciprocal(), 1, 1000);
  CHECK(direct == doctest::Approx(7.4854708605503449).epsilon(1e-15));
  const double em = em_sum(sf_reciprocal(), 1, 1000, 5);
  CHECK(em - direct == doctest::Approx(1.7525890667e-3).epsilon(1e-6));
}

TEST_CASE("em_sum exact path: polynomial antidifference telescopes exactly") {
  // g = x^2: closed form n(n+1)(2n+1)/6.
  const RationalPolynomial sq({Rational(0), Rational(0), Rational(1)});
  CHECK(em_sum_exact(sq, 1, 100, 3) == Rational(338350));
  CHECK(em_sum_exact(sq, 1, 100, 7) == Rational(338350));  // higher order: same value

  // Antidifference residual F(x+1) - F(x) = g(x) exactly for random rational x.
  std::mt19937 rng(20260814);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 20);
  const RationalPolynomial g({Rational(3), Rational(-2), Rational(0), Rational(5),
                              Rational(1, 7)});  // degree 4
  const RationalPolynomial f = em_antidifference_exact(g, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational x(num(rng), den(rng));
    CHECK(f(x + 1) - f(x) == g(x));
  }
}

TEST_CASE("em_antidifference: residual bounded by first omitted term for g = log") {
  // |F(x+1) - F(x) - log x| <= |first omitted Bernoulli term at x| for
  // orders 2..8 and x in {5, 10, 20, 50}.
  const SmoothFunction g = sf_log();
  for (unsigned order = 2; order <= 8; ++order) {
    for (const double x : {5.0, 10.0, 20.0, 50.0}) {
      const double resid =
          em_antidifference(g, x + 1.0, order) - em_antidifference(g, x, order) - std::log(x);
      // First omitted term: next nonzero coefficient B_(j+1)/(j+1)! g^(j)(x),
      // j = next odd index beyond `order`.
      const unsigned j = (order % 2 == 1) ? order + 2 : order + 1;
      const InverseShiftExpansion e = inverse_shift_coefficients(j);
      const double omitted =
          std::abs(to_double(e.derivative_coefficients[j - 1]) * g.derivative(j, x));
      // The differenced quantities are of size ~(x+1)log(x+1), so the residual
      // carries a few ulps of that magnitude on top of the enveloping bound.
      const double rounding = 8 * std::numeric_limits<double>::epsilon() * (x + 1.0) *
                              (std::log(x + 1.0) + 1.0);
      CHECK(std::abs(resid) <= omitted + rounding);
    }
  }
}

TEST_CASE("em_sum order 0 reduces to the trapezoid-like form") {
  // F = Int g - g/2  =>  sum = Int_a^(b+1) g - g(b+1)/2 + g(a)/2.
  const SmoothFunction g = sf_reciprocal();
  const double em0 = em_sum(g, 1, 1000, 0);
  const double trapezoid = (std::log(1001.0) - std::log(1.0)) - 0.5 / 1001.0 + 0.5 / 1.0;
  CHECK(em0 == doctest::Approx(trapezoid).epsilon(1e-15));
}

TEST_CASE("dropping the -1/2 coefficient recreates the half-log flaw") {
  // The antidifference without the constant term differs from the full one by
  // exactly +g(x)/2; for g = log that is the half-log discrepancy.
  const SmoothFunction g = sf_log();
  for (const double x : {2.0, 5.0, 10.0, 20.0, 50.0}) {
    const double with_constant = em_antidifference(g, x, 7);
    const double without = em_antidifference(g, x, 7, /*include_constant_term=*/false);
    CHECK(std::abs((without - with_constant) - 0.5 * std::log(x)) <= 1e-12);
  }
}
