#include "stirlab/euler_maclaurin.hpp"

#include <stdexcept>

namespace stirlab {

InverseShiftExpansion inverse_shift_coefficients(unsigned max_derivative_order) {
  InverseShiftExpansion e;
  e.antiderivative_coefficient = 1;
  e.constant_coefficient = Rational(-1, 2);
  e.derivative_coefficients.reserve(max_derivative_order);
  Rational fact = 1;  // (j+1)! built incrementally
  for (unsigned j = 1; j <= max_derivative_order; ++j) {
    fact *= Rational(j + 1);
    e.derivative_coefficients.push_back(bernoulli(j + 1) / fact);
  }
  // Note fact starts at 1! and the loop multiplies up to (j+1)!; entry j-1 of
  // the vector is the D^j coefficient B_(j+1)/(j+1)!.
  return e;
}

double em_antidifference(const SmoothFunction& g, double x, unsigned order,
                         bool include_constant_term) {
  double f = g.antiderivative(x);
  if (include_constant_term) f -= 0.5 * g.value(x);
  // Only odd derivative orders contribute (B_(j+1) vanishes for even j >= 2).
  const InverseShiftExpansion e = inverse_shift_coefficients(order);
  for (unsigned j = 1; j <= order; j += 2) {
    const double c = to_double(e.derivative_coefficients[j - 1]);
    if (c != 0.0) f += c * g.derivative(j, x);
  }
  return f;
}

double em_sum(const SmoothFunction& g, long long a, long long b, unsigned order) {
  if (a > b) throw std::domain_error("em_sum: a > b");
  const double upper = em_antidifference(g, static_cast<double>(b) + 1.0, order);
  const double lower = em_antidifference(g, static_cast<double>(a), order);
  return upper - lower;
}

RationalPolynomial em_antidifference_exact(const RationalPolynomial& g, unsigned order) {
  RationalPolynomial f = g.antiderivative();
  f = f - g * Rational(1, 2);
  const InverseShiftExpansion e = inverse_shift_coefficients(order);
  for (unsigned j = 1; j <= order; j += 2) {
    const Rational& c = e.derivative_coefficients[j - 1];
    if (c != 0) f = f + g.derivative(j) * c;
  }
  return f;
}

Rational em_sum_exact(const RationalPolynomial& g, long long a, long long b, unsigned order) {
  if (a > b) throw std::domain_error("em_sum_exact: a > b");
  const RationalPolynomial f = em_antidifference_exact(g, order);
  return f(Rational(b) + 1) - f(Rational(a));
}

}  // namespace stirlab
