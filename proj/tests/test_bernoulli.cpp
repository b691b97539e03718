#include <doctest.h>

#include <cmath>
#include <numbers>

#include "stirlab/bernoulli.hpp"

using namespace stirlab;

namespace {

// Independent second algorithm (Akiyama–Tanigawa), used only here.  It
// produces the B_1 = +1/2 convention, so the n = 1 entry is sign-flipped
// before comparison against the production recurrence.
Rational akiyama_tanigawa(unsigned n) {
  std::vector<Rational> a(n + 1);
  for (unsigned j = 0; j <= n; ++j) a[j] = Rational(1, j + 1);
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 0; j <= n - i; ++j) a[j] = Rational(j + 1) * (a[j] - a[j + 1]);
  return a[0];
}

}  // namespace

TEST_CASE("binomial: exact values and domain") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(7, 7) == 1);
  CHECK(binomial(30, 15) == BigInt("155117520"));
  CHECK_THROWS_AS(binomial(3, 4), std::domain_error);

  // Pascal identity on a grid.
  for (unsigned n = 1; n <= 20; ++n)
    for (unsigned k = 1; k <= n; ++k)
      CHECK(binomial(n + 1, k) == binomial(n, k - 1) + binomial(n, k));
}

TEST_CASE("bernoulli: frozen exact values") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(6) == Rational(1, 42));
  CHECK(bernoulli(7) == 0);
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(16) == Rational(-3617, 510));
  CHECK(bernoulli(20) == Rational(-174611, 330));
  CHECK(bernoulli(30) == Rational(BigInt("8615841276005"), BigInt("14322")));
}

TEST_CASE("bernoulli: defining recurrence holds exactly through n = 40") {
  for (unsigned m = 1; m <= 40; ++m) {
    Rational acc = 0;
    for (unsigned j = 0; j <= m; ++j) acc += Rational(binomial(m + 1, j)) * bernoulli(j);
    CHECK(acc == 0);
  }
}

TEST_CASE("bernoulli: odd indices > 1 vanish") {
  for (unsigned k = 1; k <= 19; ++k) CHECK(bernoulli(2 * k + 1) == 0);
}

TEST_CASE("bernoulli: independent Akiyama-Tanigawa algorithm agrees to n = 40") {
  for (unsigned n = 0; n <= 40; ++n) {
    Rational at = akiyama_tanigawa(n);
    if (n == 1) at = -at;  // convention flip
    CHECK(at == bernoulli(n));
  }
}

TEST_CASE("BernoulliTable: construction invariants") {
  const BernoulliTable table(24);
  CHECK(table.value(0) == 1);
  CHECK(table.value(1) == Rational(-1, 2));
  for (unsigned k = 1; 2 * k + 1 <= 24; ++k) CHECK(table.value(2 * k + 1) == 0);
  for (unsigned n = 0; n <= 24; ++n) CHECK(table.value(n) == bernoulli(n));
  CHECK_THROWS_AS(table.value(25), std::domain_error);
}

TEST_CASE("zeta_even_coefficient: frozen exact values, positivity") {
  CHECK(zeta_even_coefficient(1) == Rational(1, 6));
  CHECK(zeta_even_coefficient(2) == Rational(1, 90));
  CHECK(zeta_even_coefficient(3) == Rational(1, 945));
  CHECK(zeta_even_coefficient(4) == Rational(1, 9450));
  CHECK(zeta_even_coefficient(5) == Rational(1, 93555));
  CHECK(zeta_even_coefficient(6) == Rational(691, 638512875));
  CHECK(zeta_even_coefficient(7) == Rational(2, 18243225));
  CHECK(zeta_even_coefficient(8) == Rational(BigInt("3617"), BigInt("325641566250")));
  for (unsigned n = 1; n <= 20; ++n) CHECK(zeta_even_coefficient(n) > 0);
  CHECK_THROWS_AS(zeta_even_coefficient(0), std::domain_error);
}

TEST_CASE("zeta_even_coefficient: float cross-check against pi powers") {
  // zeta(2) = pi^2/6 etc., at double precision.
  const double pi = std::numbers::pi;
  CHECK(to_double(zeta_even_coefficient(1)) * pi * pi ==
        doctest::Approx(1.6449340668482264).epsilon(1e-15));
  CHECK(to_double(zeta_even_coefficient(2)) * std::pow(pi, 4.0) ==
        doctest::Approx(1.0823232337111382).epsilon(1e-15));
}
