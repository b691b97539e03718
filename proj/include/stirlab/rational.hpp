#pragma once

// Exact arbitrary-precision integer and rational arithmetic.
//
// Every identity in this library (Bernoulli recurrence, series coefficients,
// Taylor reductions) is stated over the rationals; floating point only enters
// when a value is finally evaluated at a point.  Boost.Multiprecision already
// provides exact, always-reduced rationals with a positive denominator, which
// is precisely the contract we need, so we use it directly instead of growing
// our own bignum type.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace stirlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Render a rational as "p/q" ("p" when the denominator is 1).  This is the
/// one exact wire format used by the CLI and the golden tests; floats are
/// never substituted for rationals anywhere in the output path.
inline std::string to_fraction_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

/// Nearest-double evaluation of an exact rational.
inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

}  // namespace stirlab
