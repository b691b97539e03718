#pragma once

// Exact polynomials over the rationals: the carrier for every "terminates
// exactly" path (polynomial antidifferences, Taylor reductions, formal series
// bookkeeping in tests).

#include <cstddef>
#include <vector>

#include "stirlab/rational.hpp"

namespace stirlab {

/// Polynomial with Rational coefficients, stored lowest power first.
/// The zero polynomial has an empty coefficient list and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> ascending_coefficients)
      : coeffs_(std::move(ascending_coefficients)) {
    trim();
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  double operator()(double x) const {
    double acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + to_double(coeffs_[i]);
    return acc;
  }

  RationalPolynomial derivative() const {
    if (coeffs_.size() <= 1) return RationalPolynomial();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(i);
    return RationalPolynomial(std::move(d));
  }

  RationalPolynomial derivative(unsigned order) const {
    RationalPolynomial p = *this;
    for (unsigned i = 0; i < order; ++i) p = p.derivative();
    return p;
  }

  /// Antiderivative with zero constant term (the fixed branch).
  RationalPolynomial antiderivative() const {
    std::vector<Rational> a(coeffs_.size() + 1);
    a[0] = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) a[i + 1] = coeffs_[i] / Rational(i + 1);
    return RationalPolynomial(std::move(a));
  }

  RationalPolynomial operator+(const RationalPolynomial& o) const {
    std::vector<Rational> s(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) s[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) s[i] += o.coeffs_[i];
    return RationalPolynomial(std::move(s));
  }

  RationalPolynomial operator-(const RationalPolynomial& o) const {
    std::vector<Rational> s(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) s[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) s[i] -= o.coeffs_[i];
    return RationalPolynomial(std::move(s));
  }

  RationalPolynomial operator*(const Rational& c) const {
    std::vector<Rational> s = coeffs_;
    for (auto& v : s) v *= c;
    return RationalPolynomial(std::move(s));
  }

  bool operator==(const RationalPolynomial& o) const { return coeffs_ == o.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

}  // namespace stirlab
