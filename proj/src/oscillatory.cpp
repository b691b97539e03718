#include "stirlab/oscillatory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stirlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double dfactorial(unsigned n) {
  double f = 1.0;
  for (unsigned i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

// i^m for m mod 4, kept exact instead of routing through complex pow.
Complex i_power(unsigned m) {
  switch (m % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

Complex ModeSeries::value() const {
  Complex acc = log_coefficient * std::log(evaluation_point);
  for (const Complex& t : inverse_power_terms) acc += t;
  const double phase = kTwoPi * static_cast<double>(mode_index) * evaluation_point;
  acc += integration_constant * Complex(std::cos(phase), std::sin(phase));
  return acc;
}

std::vector<Complex> expm1_zeros(unsigned K) {
  if (K == 0) throw std::domain_error("expm1_zeros: K must be >= 1");
  std::vector<Complex> zeros;
  zeros.reserve(2 * K + 1);
  zeros.emplace_back(0.0, 0.0);
  for (unsigned k = 1; k <= K; ++k) {
    zeros.emplace_back(0.0, kTwoPi * k);
    zeros.emplace_back(0.0, -kTwoPi * k);
  }
  return zeros;
}

ModeSeries mode_series(long k, double x, unsigned n_max, Complex integration_constant) {
  if (k == 0)
    throw std::domain_error(
        "mode_series: k = 0 is the x log x - x part, not an oscillatory mode");
  if (!(x > 0.0)) throw std::domain_error("mode_series: x must be > 0");

  ModeSeries ms;
  ms.mode_index = k;
  ms.evaluation_point = x;
  ms.integration_constant = integration_constant;
  // -1/(2k pi i) = i/(2k pi).
  ms.log_coefficient = Complex(0.0, 1.0 / (kTwoPi * static_cast<double>(k)));

  // (2k pi i)^(n+1) = (2|k| pi)^(n+1) · i^(n+1),  conjugated when k < 0.
  const double mag_base = kTwoPi * std::abs(static_cast<double>(k));
  ms.inverse_power_terms.reserve(n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    Complex denom_unit = i_power(n + 1);
    if (k < 0) denom_unit = std::conj(denom_unit);
    const double mag = std::pow(mag_base, static_cast<double>(n + 1)) *
                       std::pow(x, static_cast<double>(n));
    Complex term = dfactorial(n - 1) / (mag * denom_unit);
    if (n % 2 == 1) term = -term;  // (-1)^n
    ms.inverse_power_terms.push_back(term);
  }
  return ms;
}

double paired_mode_real(unsigned k, double x, unsigned n_max) {
  if (k == 0) throw std::domain_error("paired_mode_real: k must be >= 1");
  const ModeSeries plus = mode_series(static_cast<long>(k), x, n_max);
  const ModeSeries minus = mode_series(-static_cast<long>(k), x, n_max);
  return (plus.value() + minus.value()).real();
}

ResumCheck resum_term_check(unsigned n, double x) {
  if (!(x > 0.0)) throw std::domain_error("resum_term_check: x must be > 0");
  // Collapse the k-sum exactly:  sum_k k^-(2n+2) = zeta(2n+2) = q pi^(2n+2),
  // so  lhs = 2 q (-1)^n (2n)! / 2^(2n+2) · x^-(2n+1)  — pure rational before
  // the division by x^(2n+1).
  BigInt fact = 1;
  for (unsigned j = 2; j <= 2 * n; ++j) fact *= j;
  Rational lhs_coeff = 2 * zeta_even_coefficient(n + 1) * Rational(fact) /
                       Rational(BigInt(1) << (2 * n + 2));
  if (n % 2 == 1) lhs_coeff = -lhs_coeff;
  const Rational rhs_coeff =
      bernoulli(2 * n + 2) / Rational(static_cast<long long>(2 * n + 1) * (2 * n + 2));

  const double xpow = std::pow(x, static_cast<double>(2 * n + 1));
  return {to_double(lhs_coeff) / xpow, to_double(rhs_coeff) / xpow};
}

ResumCheckDirect resum_term_check_direct(unsigned n, double x, unsigned long K) {
  if (!(x > 0.0)) throw std::domain_error("resum_term_check_direct: x must be > 0");
  if (K == 0) throw std::domain_error("resum_term_check_direct: K must be >= 1");
  const double xpow = std::pow(x, static_cast<double>(2 * n + 1));
  double prefactor = 2.0 * dfactorial(2 * n) /
                     (std::pow(kTwoPi, static_cast<double>(2 * n + 2)) * xpow);
  if (n % 2 == 1) prefactor = -prefactor;

  double sum = 0.0;  // smallest terms first
  for (unsigned long k = K; k >= 1; --k)
    sum += std::pow(static_cast<double>(k), -static_cast<double>(2 * n + 2));

  ResumCheckDirect out;
  out.lhs = prefactor * sum;
  const Rational rhs_coeff =
      bernoulli(2 * n + 2) / Rational(static_cast<long long>(2 * n + 1) * (2 * n + 2));
  out.rhs = to_double(rhs_coeff) / xpow;
  out.tail_bound = std::abs(prefactor) *
                   std::pow(static_cast<double>(K), -static_cast<double>(2 * n + 1)) /
                   static_cast<double>(2 * n + 1);
  return out;
}

double paired_mode_tail_bound(double x, unsigned n_max, unsigned long K) {
  double bound = 0.0;
  for (unsigned n = 1; n <= n_max; n += 2) {
    bound += 2.0 * dfactorial(n - 1) /
             (std::pow(kTwoPi, static_cast<double>(n + 1)) *
              std::pow(x, static_cast<double>(n)) * static_cast<double>(n) *
              std::pow(static_cast<double>(K), static_cast<double>(n)));
  }
  return bound;
}

}  // namespace stirlab
