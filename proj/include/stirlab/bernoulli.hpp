#pragma once

// Exact Bernoulli numbers and the closed form for the even zeta values.
//
// Convention: B_1 = -1/2.  This is forced by the inverse-shift operator
// expansion (e^D - 1)^{-1} = D^{-1} - 1/2 + D/12 - D^3/720 + ..., whose
// constant term is B_1/1!.

#include <vector>

#include "stirlab/rational.hpp"

namespace stirlab {

/// Exact binomial coefficient C(n, k).  Throws std::domain_error when k > n.
BigInt binomial(unsigned n, unsigned k);

/// Exact B_n under the B_1 = -1/2 convention.  Values are memoized in a
/// shared table, so repeated calls are O(1); the table is grown under a lock
/// and reads return copies, keeping concurrent callers safe.
Rational bernoulli(unsigned n);

/// Exact q with zeta(2n) = q * pi^(2n):  q = (-1)^(n-1) 2^(2n) B_(2n) / (2 (2n)!).
/// q > 0 for every n >= 1.  Throws std::domain_error for n = 0.
Rational zeta_even_coefficient(unsigned n);

/// The table form of the Bernoulli numbers B_0..B_(n_max), built from the
/// defining recurrence  sum_(j=0..m) C(m+1, j) B_j = 0.
class BernoulliTable {
 public:
  explicit BernoulliTable(unsigned n_max);

  unsigned n_max() const { return static_cast<unsigned>(values_.size()) - 1; }
  const Rational& value(unsigned n) const;
  const std::vector<Rational>& values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

}  // namespace stirlab
