#include <doctest.h>

#include <cmath>
#include <numbers>

#include "stirlab/oracle.hpp"
#include "stirlab/stirling.hpp"

using namespace stirlab;

TEST_CASE("stirling_terms: frozen term values") {
  const std::vector<double> t1 = stirling_terms(1.0, 5);
  REQUIRE(t1.size() == 5);
  CHECK(t1[0] == doctest::Approx(1.0 / 12).epsilon(1e-16));   // B_2/(1*2)
  CHECK(t1[1] == doctest::Approx(-1.0 / 360).epsilon(1e-16));
  CHECK(t1[2] == doctest::Approx(1.0 / 1260).epsilon(1e-16));  // B_6 = 1/42 over 5*6
  CHECK(t1[3] == doctest::Approx(-1.0 / 1680).epsilon(1e-16));
  CHECK(t1[4] == doctest::Approx(1.0 / 1188).epsilon(1e-16));

  CHECK(stirling_terms(2.0, 1)[0] == doctest::Approx(1.0 / 24).epsilon(1e-16));

  CHECK_THROWS_AS(stirling_terms(0.0, 3), std::domain_error);
  CHECK_THROWS_AS(stirling_terms(-1.0, 3), std::domain_error);
  CHECK_THROWS_AS(stirling_terms(1.0, 0), std::domain_error);
}

TEST_CASE("stirling_terms: alternating signs") {
  const std::vector<double> t = stirling_terms(3.0, 12);
  for (std::size_t n = 0; n + 1 < t.size(); ++n) CHECK(t[n] * t[n + 1] < 0.0);
}

TEST_CASE("optimal_truncation: index of the smallest magnitude, inclusive") {
  CHECK(optimal_truncation({0.1, 0.01, 0.001, 0.01, 0.1}) == 3);
  CHECK(optimal_truncation({0.5}) == 1);
  // Ties break toward the smaller index.
  CHECK(optimal_truncation({0.3, 0.2, 0.2, 0.4}) == 2);
  // The x = 1 series truncates at term 4 (|1/1680| beats both neighbors).
  CHECK(optimal_truncation(stirling_terms(1.0, 15)) == 4);
  CHECK_THROWS_AS(optimal_truncation({}), std::domain_error);
}

TEST_CASE("log_gamma_corrected: matches exact-factorial oracles") {
  // Frozen: log(9!) = 12.801827480081469, log(20!) = 42.335616460753485.
  const EvalReport r10 = log_gamma_corrected(10.0);
  CHECK(r10.oracle_value == doctest::Approx(12.801827480081469).epsilon(1e-15));
  CHECK(r10.abs_error <= 1e-10);

  const EvalReport r21 = log_gamma_corrected(21.0);
  CHECK(r21.oracle_value == doctest::Approx(42.335616460753485).epsilon(1e-15));
  CHECK(r21.abs_error <= 1e-12);

  // Gamma(1/2) = sqrt(pi): the small-x report is honest about its larger
  // error estimate and still lands within it.
  const EvalReport rhalf = log_gamma_corrected(0.5);
  CHECK(rhalf.oracle_value == doctest::Approx(0.5723649429247001).epsilon(1e-15));
  CHECK(rhalf.abs_error <= rhalf.error_estimate);
}

TEST_CASE("log_gamma_euler: the flaw is half a logarithm") {
  // abs_error of the flawed form ~ 0.5 log x; the value equals
  // log Gamma(x) + 0.5 log x within the (tiny) series error estimate.
  const EvalReport r = log_gamma_euler(10.0);
  const double flaw = 0.5 * std::log(10.0);
  CHECK(std::abs(r.value - (r.oracle_value + flaw)) <= r.error_estimate + 1e-13);

  // Leading-part representation checks.
  const AsymptoticExpansion e1 = stirling_expansion(1.0, 15, /*corrected=*/false);
  CHECK(e1.leading_part ==
        doctest::Approx(-1.0 + 0.5 * std::log(2.0 * std::numbers::pi)).epsilon(1e-15));
  const AsymptoticExpansion e20 = stirling_expansion(20.0, 15, /*corrected=*/false);
  CHECK(e20.leading_part ==
        doctest::Approx(20.0 * std::log(20.0) - 20.0 +
                        0.5 * std::log(2.0 * std::numbers::pi))
            .epsilon(1e-15));
}

TEST_CASE("discrepancy: equals half log x to rounding") {
  CHECK(discrepancy(1.0) == 0.0);
  CHECK(discrepancy(std::exp(2.0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(discrepancy(10.0) == doctest::Approx(1.151292546497023).epsilon(1e-15));
  CHECK_THROWS_AS(discrepancy(0.0), std::domain_error);

  // Consistency with the full report difference (which carries more rounding
  // but must agree to ~1e-12).
  for (const double x : {0.7, 3.0, 25.0, 80.0}) {
    const double via_reports = log_gamma_euler(x).value - log_gamma_corrected(x).value;
    CHECK(std::abs(discrepancy(x) - via_reports) <= 1e-12);
  }
}

TEST_CASE("factor_series_coefficients: frozen exact table") {
  const std::vector<Rational> c = factor_series_coefficients(6);
  REQUIRE(c.size() == 7);
  CHECK(c[0] == 1);
  CHECK(c[1] == Rational(1, 12));
  CHECK(c[2] == Rational(1, 288));
  CHECK(c[3] == Rational(-139, 51840));
  CHECK(c[4] == Rational(-571, 2488320));
  CHECK(c[5] == Rational(163879, 209018880));
  CHECK(c[6] == Rational(BigInt("5246819"), BigInt("75246796800")));
  CHECK_THROWS_AS(factor_series_coefficients(0), std::domain_error);
}

TEST_CASE("factor_series_coefficients: agrees with numeric exponentiation") {
  // exp(sum of series terms at x = 50) vs sum c_j / 50^j for m = 3.  The two
  // truncations differ first in the omitted j = 4 term, so that sets the
  // comparison scale (~3.7e-11 here); 2x covers the yet-higher orders.
  const double x = 50.0;
  const std::vector<double> terms = stirling_terms(x, 2);  // odd powers 1/x, 1/x^3
  const double lhs = std::exp(terms[0] + terms[1]);
  const std::vector<Rational> c = factor_series_coefficients(4);
  double rhs = 0.0;
  for (unsigned j = 0; j <= 3; ++j) rhs += to_double(c[j]) / std::pow(x, double(j));
  const double omitted = std::abs(to_double(c[4])) / std::pow(x, 4.0);
  CHECK(std::abs(lhs - rhs) <= 2 * omitted);
}

TEST_CASE("euler_constant_claim: optimal truncation lands near half log(2 pi)") {
  const EvalReport r = euler_constant_claim(15);
  CHECK(r.truncation_index == 4);
  // 1 - 1/12 + 1/360 - 1/1260 + 1/1680 = 4633/5040.
  CHECK(r.value == doctest::Approx(4633.0 / 5040.0).epsilon(1e-15));
  CHECK(r.oracle_value == doctest::Approx(0.9189385332046728).epsilon(1e-15));
  CHECK(r.abs_error == doctest::Approx(3.0749854135895808e-4).epsilon(1e-9));
  CHECK(r.abs_error <= 5e-3);
  CHECK_THROWS_AS(euler_constant_claim(3), std::domain_error);

  // Divergence onset: terms grow again past the optimal index.
  const std::vector<double> t = stirling_terms(1.0, 8);
  CHECK(std::abs(t[7]) > std::abs(t[3]));
  CHECK(std::abs(t[4]) > std::abs(t[3]));
}

TEST_CASE("euler_constant_claim: hand-checkable partial sums") {
  const std::vector<double> t = stirling_terms(1.0, 4);
  double partial = 1.0;
  const double expected[4] = {0.9166666666666666, 0.9194444444444444,
                              0.9186507936507936, 0.9192460317460317};
  for (unsigned n = 0; n < 4; ++n) {
    partial -= t[n];
    CHECK(partial == doctest::Approx(expected[n]).epsilon(1e-15));
  }
}
