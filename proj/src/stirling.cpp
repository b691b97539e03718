#include "stirlab/stirling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "stirlab/oracle.hpp"

namespace stirlab {

namespace {

// Exact series coefficient B_(2n) / ((2n-1) 2n).
Rational stirling_coefficient(unsigned n) {
  return bernoulli(2 * n) / Rational(static_cast<long long>(2 * n - 1) * (2 * n));
}

// |t_(N+1)|, the first omitted term, computed past the housed list if needed.
double first_omitted(double x, unsigned kept) {
  const unsigned n = kept + 1;
  return std::abs(to_double(stirling_coefficient(n)) /
                  std::pow(x, static_cast<double>(2 * n - 1)));
}

EvalReport report_from_expansion(const AsymptoticExpansion& e, double oracle_value) {
  EvalReport r;
  r.value = e.leading_part;
  for (unsigned n = 1; n <= e.truncation_index; ++n) r.value += e.terms[n - 1];
  r.truncation_index = e.truncation_index;
  r.error_estimate = e.error_estimate;
  r.oracle_value = oracle_value;
  r.abs_error = std::abs(r.value - oracle_value);
  return r;
}

}  // namespace

std::vector<double> stirling_terms(double x, unsigned n_max) {
  if (!(x > 0.0)) throw std::domain_error("stirling_terms: x must be > 0");
  if (n_max == 0) throw std::domain_error("stirling_terms: n_max must be >= 1");
  std::vector<double> terms;
  terms.reserve(n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    terms.push_back(to_double(stirling_coefficient(n)) /
                    std::pow(x, static_cast<double>(2 * n - 1)));
  }
  return terms;
}

unsigned optimal_truncation(const std::vector<double>& terms) {
  if (terms.empty()) throw std::domain_error("optimal_truncation: empty term list");
  unsigned best = 1;
  double best_mag = std::abs(terms[0]);
  for (unsigned i = 1; i < terms.size(); ++i) {
    const double mag = std::abs(terms[i]);
    if (mag < best_mag) {  // strict: ties keep the earlier index
      best_mag = mag;
      best = i + 1;
    }
  }
  return best;
}

AsymptoticExpansion stirling_expansion(double x, unsigned n_max, bool corrected) {
  AsymptoticExpansion e;
  e.evaluation_point = x;
  const double two_pi = 2.0 * std::numbers::pi;
  e.leading_part = x * std::log(x) - x +
                   0.5 * std::log(corrected ? two_pi / x : two_pi);
  e.terms = stirling_terms(x, n_max);
  e.truncation_index = optimal_truncation(e.terms);
  e.error_estimate = e.truncation_index < n_max
                         ? std::abs(e.terms[e.truncation_index])
                         : first_omitted(x, e.truncation_index);
  return e;
}

EvalReport log_gamma_euler(double x, unsigned n_max) {
  const AsymptoticExpansion e = stirling_expansion(x, n_max, /*corrected=*/false);
  return report_from_expansion(e, lgamma_ref(x).value);
}

EvalReport log_gamma_corrected(double x, unsigned n_max) {
  const AsymptoticExpansion e = stirling_expansion(x, n_max, /*corrected=*/true);
  return report_from_expansion(e, lgamma_ref(x).value);
}

double discrepancy(double x) {
  if (!(x > 0.0)) throw std::domain_error("discrepancy: x must be > 0");
  const double two_pi = 2.0 * std::numbers::pi;
  // Everything else in the two formulas cancels identically term-by-term.
  return 0.5 * (std::log(two_pi) - std::log(two_pi / x));
}

std::vector<Rational> factor_series_coefficients(unsigned m) {
  if (m == 0) throw std::domain_error("factor_series_coefficients: m must be >= 1");
  // exp of the formal series S(z) = sum_(n>=1) s_(2n-1) z^(2n-1) (z = 1/x)
  // with s_(2n-1) = B_(2n)/((2n-1) 2n).  From C' = S' C:
  //   j c_j = sum_(odd i <= j) i s_i c_(j-i),   c_0 = 1.
  std::vector<Rational> s(m + 1, Rational(0));
  for (unsigned n = 1; 2 * n - 1 <= m; ++n) s[2 * n - 1] = stirling_coefficient(n);
  std::vector<Rational> c(m + 1, Rational(0));
  c[0] = 1;
  for (unsigned j = 1; j <= m; ++j) {
    Rational acc = 0;
    for (unsigned i = 1; i <= j; i += 2) acc += Rational(i) * s[i] * c[j - i];
    c[j] = acc / Rational(j);
  }
  return c;
}

EvalReport euler_constant_claim(unsigned n_max) {
  if (n_max < 4) throw std::domain_error("euler_constant_claim: n_max must be >= 4");
  const std::vector<double> terms = stirling_terms(1.0, n_max);
  const unsigned cut = optimal_truncation(terms);
  EvalReport r;
  r.value = 1.0;
  for (unsigned n = 1; n <= cut; ++n) r.value -= terms[n - 1];
  r.truncation_index = cut;
  r.error_estimate = cut < n_max ? std::abs(terms[cut]) : first_omitted(1.0, cut);
  r.oracle_value = 0.5 * std::log(2.0 * std::numbers::pi);
  r.abs_error = std::abs(r.value - r.oracle_value);
  return r;
}

}  // namespace stirlab
