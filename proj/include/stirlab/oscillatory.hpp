#pragma once

// The oscillatory modes of the simple difference equation and their
// resummation into the Stirling series.
//
// e^z - 1 has simple zeros at z = 0 and z = ±2k·pi·i.  Each nonzero zero
// contributes a mode integral
//
//   e^(2k pi i x) ∫ e^(-2k pi i x) log x dx
//     = -log(x)/(2k pi i) + sum_(n>=1) (-1)^n (n-1)! / ((2k pi i)^(n+1) x^n)
//       + C_k e^(2k pi i x),
//
// and the ±k pair is real: the log parts cancel and the power terms combine
// into twice the real part.  Summing the pairs over all k and swapping the
// summation order (k first, via the even zeta values) collapses the double
// sum into the Bernoulli terms B_(2n+2)/((2n+1)(2n+2) x^(2n+1)) — the
// resummation identity this module checks both exactly and by direct
// summation with an explicit tail bound.

#include <complex>
#include <vector>

#include "stirlab/bernoulli.hpp"

namespace stirlab {

using Complex = std::complex<double>;

/// One mode integral in evaluated form.
struct ModeSeries {
  long mode_index = 0;                       // k, nonzero
  double evaluation_point = 1.0;             // x > 0
  Complex log_coefficient;                   // -1/(2k pi i) = i/(2k pi)
  std::vector<Complex> inverse_power_terms;  // entry n-1 = (-1)^n (n-1)! / ((2k pi i)^(n+1) x^n)
  Complex integration_constant{0.0, 0.0};    // C_k; defaults to 0

  /// log term + power terms + C_k e^(2k pi i x).
  Complex value() const;
};

/// {0} ∪ {±2k·pi·i : k = 1..K}, in the order 0, +2πi, −2πi, +4πi, −4πi, ...
/// Every entry z satisfies |e^z - 1| <= 1e-12 in double evaluation.
std::vector<Complex> expm1_zeros(unsigned K);

/// The k-th mode at x, truncated after n_max power terms.
/// Throws std::domain_error for k = 0 (the zero mode is the x log x - x part,
/// which lives with the Stirling series) or x <= 0.
ModeSeries mode_series(long k, double x, unsigned n_max, Complex integration_constant = {});

/// Re[mode k + mode -k] with C_(±k) = 0.  The log contributions cancel
/// exactly; the imaginary part of the pair sum is pure rounding noise.
double paired_mode_real(unsigned k, double x, unsigned n_max);

/// Both sides of the per-n resummation identity
///   sum_(k>=1) 2/k^(2n+2) · (-1)^n (2n)! / ((2 pi)^(2n+2) x^(2n+1))
///     = B_(2n+2) / ((2n+1)(2n+2) x^(2n+1)),
/// with the k-sum collapsed through the exact even-zeta closed form.  The two
/// returned values agree to the last rational digit before float conversion.
struct ResumCheck {
  double lhs = 0.0;
  double rhs = 0.0;
};
ResumCheck resum_term_check(unsigned n, double x);

/// Direct-summation variant: k truncated at K, together with the analytic
/// tail bound  2 (2n)! / ((2 pi)^(2n+2) x^(2n+1)) · K^-(2n+1)/(2n+1).
struct ResumCheckDirect {
  double lhs = 0.0;
  double rhs = 0.0;
  double tail_bound = 0.0;
};
ResumCheckDirect resum_term_check_direct(unsigned n, double x, unsigned long K);

/// Tail bound for truncating sum_(k>K) paired_mode_real(k, x, n_max) — used
/// by the double-sum convergence checks:
///   sum over odd n <= n_max of  2 (n-1)! / ((2 pi)^(n+1) x^n) / (n K^n).
double paired_mode_tail_bound(double x, unsigned n_max, unsigned long K);

}  // namespace stirlab
