#pragma once

// A smooth real function presented as exact data: value, derivatives of every
// requested order, and one fixed antiderivative branch.  Callers supply the
// derivatives analytically — nothing in this library differentiates
// numerically, so truncation is the only error source in the operator
// expansions built on top.

#include <functional>
#include <string>

#include "stirlab/polynomial.hpp"

namespace stirlab {

struct SmoothFunction {
  std::function<double(double)> value;
  /// derivative(0, x) == value(x); derivative(m, x) is the m-th derivative.
  std::function<double(unsigned, double)> derivative;
  /// One fixed antiderivative branch (constant of integration pinned once).
  std::function<double(double)> antiderivative;
};

/// g(x) = 1
SmoothFunction sf_one();
/// g(x) = x
SmoothFunction sf_identity();
/// g(x) = x^2
SmoothFunction sf_square();
/// g(x) = e^(a x); a = 0 degenerates to the constant 1.
SmoothFunction sf_exp(double a);
/// g(x) = log x on x > 0; antiderivative branch x log x - x.
SmoothFunction sf_log();
/// g(x) = 1/x on x > 0; antiderivative branch log x.
SmoothFunction sf_reciprocal();
/// Exact-coefficient polynomial evaluated in floating point.
SmoothFunction sf_polynomial(const RationalPolynomial& p);

/// Named registry used by the CLI and the solver harness:
///   "1", "x", "x^2", "exp" (needs alpha), "log", "1/x".
/// Throws std::domain_error for unknown names.
SmoothFunction smooth_by_name(const std::string& name, double alpha = 1.0);

}  // namespace stirlab
