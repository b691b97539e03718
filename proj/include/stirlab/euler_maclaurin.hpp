#pragma once

// The inverse-shift operator (e^D - 1)^{-1} as a coefficient stream and the
// Euler–Maclaurin antidifference built from it.
//
// Formally  (e^D - 1)^{-1} = sum_n B_n D^(n-1) / n!
//                          = D^{-1} - 1/2 + D/12 - D^3/720 + ...,
// so an antidifference of g (a function F with F(x+1) - F(x) ~ g(x)) is
//   F(x) = Integral g  -  g(x)/2  +  sum_(even n >= 2) B_n/n! g^(n-1)(x),
// truncated at an explicit derivative order.  The constant term -1/2 is the
// historically interesting part: dropping it is exactly the flaw that shifts
// log-Stirling's constant by half a logarithm (see stirling.hpp).

#include <vector>

#include "stirlab/bernoulli.hpp"
#include "stirlab/polynomial.hpp"
#include "stirlab/smooth_function.hpp"

namespace stirlab {

/// Exact coefficients of (e^D - 1)^{-1} truncated after D^max_order.
struct InverseShiftExpansion {
  Rational antiderivative_coefficient;  // coefficient of D^{-1}; always 1
  Rational constant_coefficient;        // always -1/2 (= B_1/1!)
  /// Entry j = coefficient of the j-th derivative = B_(j+1)/(j+1)!.
  std::vector<Rational> derivative_coefficients;
};

InverseShiftExpansion inverse_shift_coefficients(unsigned max_derivative_order);

/// Truncated antidifference F(x) at the given derivative order.
/// `include_constant_term = false` drops the -g(x)/2 term, reproducing the
/// flawed expansion whose antidifference of log x misses -½·log x.
double em_antidifference(const SmoothFunction& g, double x, unsigned order,
                         bool include_constant_term = true);

/// sum_(k=a..b) g(k) ~= F(b+1) - F(a).  Error is bounded by twice the first
/// omitted Bernoulli-term magnitude, evaluated at the endpoints.
/// Throws std::domain_error when a > b.
double em_sum(const SmoothFunction& g, long long a, long long b, unsigned order);

/// Exact-path antidifference for polynomial g: the expansion terminates at
/// order >= deg g, so F(x+1) - F(x) = g(x) holds as a rational identity.
RationalPolynomial em_antidifference_exact(const RationalPolynomial& g, unsigned order);

/// Exact polynomial summation through the antidifference: F(b+1) - F(a).
Rational em_sum_exact(const RationalPolynomial& g, long long a, long long b, unsigned order);

}  // namespace stirlab
