#include "stirlab/bernoulli.hpp"

#include <mutex>
#include <stdexcept>

namespace stirlab {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) throw std::domain_error("binomial: k > n");
  // Multiplicative form; every intermediate division is exact because
  // C(n, 0..j) are integers.
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (unsigned j = 1; j <= k; ++j) {
    c *= n - k + j;
    c /= j;
  }
  return c;
}

BernoulliTable::BernoulliTable(unsigned n_max) {
  values_.reserve(n_max + 1);
  values_.emplace_back(1);  // B_0
  for (unsigned m = 1; m <= n_max; ++m) {
    // Solve  sum_(j=0..m) C(m+1, j) B_j = 0  for B_m.
    Rational acc = 0;
    for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * values_[j];
    values_.push_back(-acc / Rational(binomial(m + 1, m)));
  }
}

const Rational& BernoulliTable::value(unsigned n) const {
  if (n >= values_.size()) throw std::domain_error("BernoulliTable: index beyond n_max");
  return values_[n];
}

Rational bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<Rational> memo{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (memo.size() <= n) {
    const unsigned m = static_cast<unsigned>(memo.size());
    Rational acc = 0;
    for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * memo[j];
    memo.push_back(-acc / Rational(binomial(m + 1, m)));
  }
  return memo[n];
}

Rational zeta_even_coefficient(unsigned n) {
  if (n == 0) throw std::domain_error("zeta_even_coefficient: n must be >= 1");
  // zeta(2n) = (-1)^(n-1) (2 pi)^(2n) B_(2n) / (2 (2n)!)  =>  pull out pi^(2n).
  BigInt fact = 1;
  for (unsigned j = 2; j <= 2 * n; ++j) fact *= j;
  Rational q = bernoulli(2 * n) * Rational(BigInt(1) << (2 * n)) / Rational(2 * fact);
  return (n % 2 == 0) ? -q : q;
}

}  // namespace stirlab
