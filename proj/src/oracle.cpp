#include "stirlab/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace stirlab {

namespace {

constexpr unsigned kSpougeA = 15;
constexpr unsigned kExactFactorialCap = 2000;

// Spouge coefficients c_0 = sqrt(2 pi), c_k = (-1)^(k-1)/(k-1)! (a-k)^(k-1/2) e^(a-k),
// computed once in 50-digit floats.
const std::vector<Float50>& spouge_coefficients() {
  static const std::vector<Float50> coeffs = [] {
    std::vector<Float50> c;
    c.reserve(kSpougeA);
    c.push_back(sqrt(2 * boost::math::constants::pi<Float50>()));
    Float50 fact = 1;  // (k-1)!
    for (unsigned k = 1; k < kSpougeA; ++k) {
      if (k > 1) fact *= (k - 1);
      const Float50 ak = Float50(kSpougeA) - k;
      Float50 term = pow(ak, Float50(k) - Float50(0.5)) * exp(ak) / fact;
      if (k % 2 == 0) term = -term;
      c.push_back(term);
    }
    return c;
  }();
  return coeffs;
}

// log Gamma(x) for x >= 1 via Spouge's formula with z = x - 1:
//   Gamma(z+1) = (z+a)^(z+1/2) e^(-(z+a)) (c_0 + sum_k c_k/(z+k) + eps).
Float50 lgamma_spouge(const Float50& x) {
  const Float50 z = x - 1;
  const auto& c = spouge_coefficients();
  Float50 acc = c[0];
  for (unsigned k = 1; k < kSpougeA; ++k) acc += c[k] / (z + k);
  return (z + Float50(0.5)) * log(z + kSpougeA) - (z + kSpougeA) + log(acc);
}

bool is_integer(double x) { return x == std::floor(x); }

}  // namespace

OracleValue lgamma_ref(double x) {
  if (!(x > 0.0)) throw std::domain_error("lgamma_ref: x must be > 0");
  OracleValue out;

  if (is_integer(x) && x <= static_cast<double>(kExactFactorialCap)) {
    const unsigned long n = static_cast<unsigned long>(x);
    BigInt fact = 1;
    for (unsigned long j = 2; j < n; ++j) fact *= j;
    const Float50 lg = log(Float50(fact));
    out.value = lg.convert_to<double>();
    out.guaranteed_abs_error = 4.0 * std::abs(out.value) *
                               std::numeric_limits<double>::epsilon();
    out.method = "exact-factorial";
    return out;
  }

  if (is_integer(2.0 * x) && x <= static_cast<double>(kExactFactorialCap)) {
    // x = m + 1/2: Gamma(x) = (x-1)(x-2)...(1/2) Gamma(1/2), an exact rational
    // multiple of sqrt(pi).
    Rational prod = 1;
    for (Rational t = Rational(static_cast<long long>(2.0 * x) - 2, 2); t > 0; t -= 1) prod *= t;
    const Float50 lg = log(Float50(numerator(prod)) / Float50(denominator(prod))) +
                       log(boost::math::constants::pi<Float50>()) / 2;
    out.value = lg.convert_to<double>();
    out.guaranteed_abs_error = 4.0 * std::max(1.0, std::abs(out.value)) *
                               std::numeric_limits<double>::epsilon();
    out.method = "closed-form";
    return out;
  }

  // General path.  Shift x into [1, inf) first: log Gamma(x) = log Gamma(x+1) - log x.
  Float50 shift = 0;
  Float50 xf(x);
  if (xf < 1) {
    shift = -log(xf);
    xf += 1;
  }
  const Float50 lg = lgamma_spouge(xf) + shift;
  out.value = lg.convert_to<double>();
  out.guaranteed_abs_error = 1e-12;
  out.method = "spouge-class";
  return out;
}

OracleValue zeta_direct(double s, unsigned long K) {
  if (!(s > 1.0)) throw std::domain_error("zeta_direct: s must be > 1");
  if (K == 0) throw std::domain_error("zeta_direct: K must be >= 1");
  // Smallest terms first so the compensated sum sees them before the head.
  double sum = 0.0, comp = 0.0;
  for (unsigned long k = K; k >= 1; --k) {
    const double v = std::pow(static_cast<double>(k), -s);
    const double t = sum + v;
    comp += (std::abs(sum) >= std::abs(v)) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  OracleValue out;
  out.value = sum + comp;
  out.guaranteed_abs_error = std::pow(static_cast<double>(K), 1.0 - s) / (s - 1.0);
  out.method = "direct-sum";
  return out;
}

std::vector<Float50> zeta_even_direct_hp(unsigned n_max, unsigned long K) {
  if (n_max == 0) throw std::domain_error("zeta_even_direct_hp: n_max must be >= 1");
  std::vector<Float50> sums(n_max, Float50(0));
  // One reciprocal per k; k^(-2n) then costs one multiply per n.
  for (unsigned long k = K; k >= 1; --k) {
    const double k2 = static_cast<double>(k) * static_cast<double>(k);  // exact for k <= 9e7
    const Float50 r2 = 1 / Float50(k2);
    Float50 p = r2;
    for (unsigned n = 0; n < n_max; ++n) {
      sums[n] += p;
      if (n + 1 < n_max) p *= r2;
    }
  }
  return sums;
}

double neumaier_sum(const std::vector<double>& values) {
  double sum = 0.0, comp = 0.0;
  for (const double v : values) {
    const double t = sum + v;
    comp += (std::abs(sum) >= std::abs(v)) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  return sum + comp;
}

double sum_direct(const SmoothFunction& g, long long a, long long b) {
  if (a > b) throw std::domain_error("sum_direct: a > b");
  double sum = 0.0, comp = 0.0;
  for (long long k = a; k <= b; ++k) {
    const double v = g.value(static_cast<double>(k));
    const double t = sum + v;
    comp += (std::abs(sum) >= std::abs(v)) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  return sum + comp;
}

}  // namespace stirlab
