#pragma once

// Independent ground truth for the acceptance gates.  Nothing here shares a
// code path with the series modules it validates: factorial logarithms come
// from big-integer products, half-integer gamma from the exact descent to
// Gamma(1/2) = sqrt(pi), general arguments from a convergent (non-asymptotic)
// approximation evaluated in 50-digit floats, and zeta from direct summation
// with an integral tail bound.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "stirlab/rational.hpp"
#include "stirlab/smooth_function.hpp"

namespace stirlab {

using Float50 = boost::multiprecision::cpp_bin_float_50;

struct OracleValue {
  double value = 0.0;
  double guaranteed_abs_error = 0.0;
  /// One of: exact-factorial | closed-form | spouge-class | direct-sum.
  std::string method;
};

/// log Gamma(x) for x > 0.
///  - integer x (<= 2000): log((x-1)!) from an exact big-integer factorial,
///    error = final float rounding only;
///  - half-integer x: exact rational descent to Gamma(1/2) = sqrt(pi);
///  - otherwise: Spouge's convergent approximation with shape parameter a=15,
///    whose certified relative error eps <= a^(-1/2) (2 pi)^(-(a+1/2))
///    ~= 1.1e-13 — evaluated in 50-digit floats because the sum cancels to
///    ~e^(-a) of its term magnitudes and would lose ~10 digits in doubles.
///    Stated error: 1e-12.
/// Throws std::domain_error for x <= 0.
OracleValue lgamma_ref(double x);

/// sum_(k=1..K) k^(-s) with guaranteed_abs_error = K^(1-s)/(s-1), the
/// integral tail bound.  Compensated summation, smallest terms first.
/// Throws std::domain_error for s <= 1.
OracleValue zeta_direct(double s, unsigned long K);

/// 50-digit direct sums  sum_(k=1..K) k^(-2n)  for n = 1..n_max in one pass.
/// The sharp tail-bound checks live here: for 2n >= 4 and K = 10^6 the
/// analytic tail (e.g. 3.3e-19) sits far below double epsilon, so comparing
/// in doubles would measure float rounding instead of the tail.
std::vector<Float50> zeta_even_direct_hp(unsigned n_max, unsigned long K);

/// Compensated (Neumaier) summation of g(k), k = a..b.
/// Throws std::domain_error when a > b.
double sum_direct(const SmoothFunction& g, long long a, long long b);

/// Neumaier-compensated sum of an arbitrary vector (exposed for tests).
double neumaier_sum(const std::vector<double>& values);

}  // namespace stirlab
