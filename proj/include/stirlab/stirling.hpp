#pragma once

// The log-Stirling asymptotic series, in both of its historical forms:
//
//   flawed:    log y(x) ~ x log x - x + log sqrt(2 pi)     + S(x)
//   corrected: log Gamma(x) ~ x log x - x + log sqrt(2 pi / x) + S(x)
//
// with the divergent series  S(x) = sum_(n>=1) B_(2n) / ((2n-1) 2n x^(2n-1)).
// The two differ by exactly ½·log x — the trace of the dropped -g(x)/2 term
// in the operator expansion (euler_maclaurin.hpp).  Both are kept as
// first-class operations: the comparison is the point, not just the correct
// value.  Divergence is handled by optimal truncation: stop at the smallest
// |term|, and report the first omitted term as the error estimate.

#include <complex>
#include <map>
#include <vector>

#include "stirlab/bernoulli.hpp"

namespace stirlab {

/// A divergent series pinned to an evaluation point, with its truncation
/// bookkeeping carried alongside the raw term values.
struct AsymptoticExpansion {
  double evaluation_point = 0.0;
  double leading_part = 0.0;          // the non-series part of the formula
  std::vector<double> terms;          // t_1..t_n_max
  unsigned truncation_index = 0;      // terms kept: t_1..t_truncation_index
  double error_estimate = 0.0;        // |first omitted term|
};

/// Evaluation summary serialized by the CLI.
struct EvalReport {
  double value = 0.0;
  unsigned truncation_index = 0;
  double error_estimate = 0.0;
  double oracle_value = 0.0;
  double abs_error = 0.0;
};

/// The periodic ambiguity h(x+1) = h(x): a constant plus per-mode constants.
/// Mode constants default to 0 (asymptotic-matching normalization); the
/// constant is pinned by the sqrt(2 pi) normalization.
struct PeriodicPart {
  double constant = 0.0;
  std::map<long, std::complex<double>> mode_constants;
};

/// t_n = B_(2n) / ((2n-1) 2n x^(2n-1)) for n = 1..n_max, each term evaluated
/// in floating point from its exact rational coefficient.
/// Throws std::domain_error for x <= 0 or n_max = 0.
std::vector<double> stirling_terms(double x, unsigned n_max);

/// 1-based index of the globally smallest |term| (first occurrence on ties);
/// truncating there, inclusive, minimizes the error of a divergent series.
/// Throws std::domain_error on an empty list.
unsigned optimal_truncation(const std::vector<double>& terms);

/// Historically flawed form: constant log sqrt(2 pi) with no -½·log x.
/// The report's oracle is the true log Gamma, so abs_error exposes the flaw
/// (~ ½·log x) rather than hiding it.
EvalReport log_gamma_euler(double x, unsigned n_max = 15);

/// Corrected form: constant log sqrt(2 pi / x).  For x >= 8 the value at
/// optimal truncation matches log Gamma to better than 1e-10.
EvalReport log_gamma_corrected(double x, unsigned n_max = 15);

/// Series-level difference flawed - corrected.  The x log x - x parts and the
/// entire term lists are identical and cancel symbolically, leaving
/// ½ (log(2 pi) - log(2 pi / x)) = ½·log x up to float rounding in two logs.
double discrepancy(double x);

/// Exact coefficients c_0..c_m of exp(S(x)) as a power series in 1/x:
/// the multiplicative correction  x! ~ sqrt(2 pi x) (x/e)^x (1 + c_1/x + ...).
/// Formal power-series exponentiation over rationals, never floats.
std::vector<Rational> factor_series_coefficients(unsigned m);

/// The divergent-constant claim: evaluate 1 - sum_(n=1..N*) B_(2n)/((2n-1) 2n)
/// at the optimal truncation N* (series at x = 1) and compare against
/// ½·log(2 pi) = 0.9189385...  Lands within ~5e-3; the series itself diverges.
/// Throws std::domain_error for n_max < 4.
EvalReport euler_constant_claim(unsigned n_max = 15);

/// Shared plumbing: the expansion object behind both report forms.
/// `corrected` selects the constant (log sqrt(2 pi / x) vs log sqrt(2 pi)).
AsymptoticExpansion stirling_expansion(double x, unsigned n_max, bool corrected);

}  // namespace stirlab
