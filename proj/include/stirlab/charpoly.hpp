#pragma once

// Constant-coefficient linear differential operators L = sum_j a_j d^j/dx^j,
// their characteristic polynomials P(z) = sum_j a_j z^j, and the simple-zero
// particular-solution formula
//
//   f(x) = e^(k x) / P'(k) · ∫_(x_lo)^x e^(-k t) g(t) dt      (P(k) = 0 simple).
//
// Summing f over all simple zeros solves L f = g, because the partial-fraction
// identity 1/P(z) = sum_k 1/(P'(k)(z - k)) splits the inverse operator into
// one first-order factor per zero.  Multiple zeros are reported by the root
// finder but refused by the solution formula — their solution family is a
// different (out-of-scope) formula.
//
// The module also houses the Taylor reduction of a difference equation
// sum_i a_i f(x + i) = g(x) to a (truncated) infinite-order differential
// operator: substituting f(x+i) = sum_j i^j f^(j)(x)/j! gives coefficients
// A_j = sum_i a_i i^j / j!, exactly over rationals.

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "stirlab/rational.hpp"
#include "stirlab/smooth_function.hpp"

namespace stirlab {

using Complex = std::complex<double>;

/// Coefficients a_0..a_n of the operator / its polynomial; n >= 1, a_n != 0.
struct CharacteristicOperator {
  std::vector<Complex> coefficients;

  explicit CharacteristicOperator(std::vector<Complex> a);
  /// Convenience for real-coefficient operators.
  static CharacteristicOperator from_real(const std::vector<double>& a);

  unsigned degree() const { return static_cast<unsigned>(coefficients.size()) - 1; }
  Complex eval(Complex z) const;             // P(z)
  Complex eval_derivative(Complex z) const;  // P'(z)
};

struct RootMultiset {
  struct Entry {
    Complex location;
    unsigned multiplicity = 1;
  };
  /// Sorted by (real, imaginary); multiplicities sum to the degree.
  std::vector<Entry> roots;
};

/// Raised when neither the simultaneous iteration nor the companion-matrix
/// fallback produces roots within the residual tolerance.
class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, unsigned iterations, double worst_residual)
      : std::runtime_error(what), iterations(iterations), worst_residual(worst_residual) {}
  unsigned iterations;
  double worst_residual;
};

/// Truncation of the infinite-order operator A_0 + A_1 D + A_2 D^2 + ...
struct TruncatedInfiniteOperator {
  std::vector<Rational> coefficients;  // A_0..A_M
};

/// A_j = sum_i a_i i^j / j! for j = 0..M (with 0^0 = 1), exact.
/// Requires at least two difference coefficients (n >= 1) and M >= n.
TruncatedInfiniteOperator reduce_difference_to_differential(
    const std::vector<Rational>& diff_coeffs, unsigned M);

/// All complex roots with clustered multiplicities, deterministically ordered
/// by (real, imaginary).  Durand–Kerner simultaneous iteration from fixed
/// starting points; companion-matrix eigenvalues as fallback.  Points where
/// the iteration stalled (Newton step |P/P'| far above rounding, the
/// signature of a multiple zero) merge into one multiplicity-m entry when
/// they lie within the stall scatter eff^(1/m) of each other and their
/// centroid keeps the residual below eff = max(tolerance, rounding floor);
/// accurate simple roots never merge.  Every returned entry satisfies
/// |P(root)| <= tolerance · max|a_j| · max(1, |root|)^degree.
/// Throws RootFindingError when no method reaches that residual.
RootMultiset polynomial_roots(const CharacteristicOperator& op, double tolerance = 1e-10);

/// The simple-zero particular solution at x, with the integration constant
/// fixed by the definite integral from x_lo.  `homogeneous_coefficient` adds
/// c·e^(k x), the free homogeneous mode the indefinite integral would carry.
/// Throws std::domain_error when k is not a zero (|P(k)| too large) or not a
/// simple one (|P'(k)| too small).
Complex particular_solution_simple(const CharacteristicOperator& op, Complex k,
                                   const SmoothFunction& g, double x_lo, double x,
                                   double quad_tol = 1e-10,
                                   Complex homogeneous_coefficient = {});

/// Derivatives of the single-mode particular solution via the recursion
/// f^(m) = k f^(m-1) + g^(m-1)/P'(k), so the residual check needs no
/// numerical differentiation.  Order 0 is the quadrature value itself.
Complex particular_derivative(const CharacteristicOperator& op, Complex k,
                              const SmoothFunction& g, double x_lo, double x,
                              unsigned order, double quad_tol = 1e-10);

/// Sum of particular_solution_simple over all roots (all must be simple).
Complex superposed_particular(const CharacteristicOperator& op, const SmoothFunction& g,
                              double x_lo, double x, double quad_tol = 1e-10,
                              double root_tolerance = 1e-10);

/// Derivative-of-any-order view of a (possibly complex-valued) trial
/// solution, as the residual evaluator consumes it.
using ComplexDerivatives = std::function<Complex(unsigned order, double x)>;

/// max over sample points of |sum_j a_j f^(j)(x) - g(x)|.
double residual(const CharacteristicOperator& op, const ComplexDerivatives& f,
                const SmoothFunction& g, const std::vector<double>& sample_points);

/// Real-valued trial solutions given as SmoothFunction.
double residual(const CharacteristicOperator& op, const SmoothFunction& f,
                const SmoothFunction& g, const std::vector<double>& sample_points);

/// The superposed particular solution packaged for the residual evaluator.
ComplexDerivatives superposed_derivatives(const CharacteristicOperator& op,
                                          const SmoothFunction& g, double x_lo,
                                          double quad_tol = 1e-10,
                                          double root_tolerance = 1e-10);

}  // namespace stirlab
