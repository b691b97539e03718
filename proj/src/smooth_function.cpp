#include "stirlab/smooth_function.hpp"

#include <cmath>
#include <stdexcept>

namespace stirlab {

namespace {

// Exact n! in double for the factorial-sized coefficients appearing in the
// derivatives of log and 1/x; n stays far below the 2^53 exactness limit in
// every supported use (orders ~ tens).
double dfactorial(unsigned n) {
  double f = 1.0;
  for (unsigned i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

}  // namespace

SmoothFunction sf_one() {
  SmoothFunction g;
  g.value = [](double) { return 1.0; };
  g.derivative = [](unsigned m, double) { return m == 0 ? 1.0 : 0.0; };
  g.antiderivative = [](double x) { return x; };
  return g;
}

SmoothFunction sf_identity() {
  SmoothFunction g;
  g.value = [](double x) { return x; };
  g.derivative = [](unsigned m, double x) {
    if (m == 0) return x;
    return m == 1 ? 1.0 : 0.0;
  };
  g.antiderivative = [](double x) { return x * x / 2.0; };
  return g;
}

SmoothFunction sf_square() {
  SmoothFunction g;
  g.value = [](double x) { return x * x; };
  g.derivative = [](unsigned m, double x) {
    switch (m) {
      case 0: return x * x;
      case 1: return 2.0 * x;
      case 2: return 2.0;
      default: return 0.0;
    }
  };
  g.antiderivative = [](double x) { return x * x * x / 3.0; };
  return g;
}

SmoothFunction sf_exp(double a) {
  if (a == 0.0) return sf_one();
  SmoothFunction g;
  g.value = [a](double x) { return std::exp(a * x); };
  g.derivative = [a](unsigned m, double x) { return std::pow(a, m) * std::exp(a * x); };
  g.antiderivative = [a](double x) { return std::exp(a * x) / a; };
  return g;
}

SmoothFunction sf_log() {
  SmoothFunction g;
  g.value = [](double x) { return std::log(x); };
  // d^m/dx^m log x = (-1)^(m-1) (m-1)! / x^m  for m >= 1.
  g.derivative = [](unsigned m, double x) {
    if (m == 0) return std::log(x);
    const double mag = dfactorial(m - 1) / std::pow(x, m);
    return (m % 2 == 1) ? mag : -mag;
  };
  g.antiderivative = [](double x) { return x * std::log(x) - x; };
  return g;
}

SmoothFunction sf_reciprocal() {
  SmoothFunction g;
  g.value = [](double x) { return 1.0 / x; };
  // d^m/dx^m x^(-1) = (-1)^m m! / x^(m+1).
  g.derivative = [](unsigned m, double x) {
    const double mag = dfactorial(m) / std::pow(x, m + 1);
    return (m % 2 == 0) ? mag : -mag;
  };
  g.antiderivative = [](double x) { return std::log(x); };
  return g;
}

SmoothFunction sf_polynomial(const RationalPolynomial& p) {
  SmoothFunction g;
  g.value = [p](double x) { return p(x); };
  g.derivative = [p](unsigned m, double x) { return p.derivative(m)(x); };
  g.antiderivative = [p](double x) { return p.antiderivative()(x); };
  return g;
}

SmoothFunction smooth_by_name(const std::string& name, double alpha) {
  if (name == "1") return sf_one();
  if (name == "x") return sf_identity();
  if (name == "x^2") return sf_square();
  if (name == "exp") return sf_exp(alpha);
  if (name == "log") return sf_log();
  if (name == "1/x") return sf_reciprocal();
  throw std::domain_error("unknown function name '" + name +
                          "' (expected one of: 1, x, x^2, exp, log, 1/x)");
}

}  // namespace stirlab
