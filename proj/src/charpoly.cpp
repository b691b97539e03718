#include "stirlab/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace stirlab {

namespace {

// Magnitude scale of P near z, used to turn absolute residuals into
// backward-relative ones: sum_j |a_j| max(1,|z|)^j <= max|a| (deg+1) max(1,|z|)^deg.
double residual_scale(const CharacteristicOperator& op, Complex z) {
  double max_a = 0.0;
  for (const Complex& a : op.coefficients) max_a = std::max(max_a, std::abs(a));
  return max_a * std::pow(std::max(1.0, std::abs(z)), static_cast<double>(op.degree()));
}

// Durand–Kerner simultaneous iteration on the monic normalization.
// Deterministic fixed starting points; returns false on non-convergence.
bool durand_kerner(const std::vector<Complex>& monic, std::vector<Complex>& roots,
                   unsigned& iterations_used) {
  const unsigned deg = static_cast<unsigned>(monic.size()) - 1;
  double coeff_mag = 0.0;
  for (const Complex& c : monic) coeff_mag = std::max(coeff_mag, std::abs(c));
  const double radius = 1.0 + coeff_mag;

  roots.resize(deg);
  const Complex seed(0.4, 0.9);  // standard non-real, non-unit-modulus seed
  Complex p = seed;
  for (unsigned j = 0; j < deg; ++j) {
    roots[j] = radius * p;
    p *= seed;
  }

  auto eval = [&monic](Complex z) {
    Complex acc = 0.0;
    for (std::size_t i = monic.size(); i-- > 0;) acc = acc * z + monic[i];
    return acc;
  };

  const unsigned max_iter = 1000;
  for (unsigned it = 1; it <= max_iter; ++it) {
    double max_step = 0.0;
    double max_residual = 0.0;
    for (unsigned j = 0; j < deg; ++j) {
      Complex denom = 1.0;
      for (unsigned l = 0; l < deg; ++l)
        if (l != j) denom *= roots[j] - roots[l];
      if (denom == Complex(0.0, 0.0)) denom = Complex(1e-30, 0.0);
      const Complex pj = eval(roots[j]);
      const Complex step = pj / denom;
      roots[j] -= step;
      max_step = std::max(max_step, std::abs(step));
      max_residual = std::max(max_residual, std::abs(pj));
    }
    iterations_used = it;
    // Converged when the updates stall at rounding level or every residual is
    // backward-stable small (multiple roots stall before the step criterion).
    const double step_floor = 1e-14 * (1.0 + radius);
    double scale = 0.0;
    for (unsigned j = 0; j < deg; ++j)
      scale = std::max(scale, std::pow(std::max(1.0, std::abs(roots[j])),
                                       static_cast<double>(deg)));
    if (max_step <= step_floor || max_residual <= 1e3 * std::numeric_limits<double>::epsilon() *
                                                      (1.0 + coeff_mag) * scale)
      return true;
  }
  return false;
}

// Companion-matrix eigenvalues of the monic polynomial.
std::vector<Complex> companion_roots(const std::vector<Complex>& monic) {
  const unsigned deg = static_cast<unsigned>(monic.size()) - 1;
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(deg, deg);
  for (unsigned i = 1; i < deg; ++i) C(i, i - 1) = 1.0;
  for (unsigned i = 0; i < deg; ++i) C(i, deg - 1) = -monic[i];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(C, /*computeEigenvectors=*/false);
  std::vector<Complex> roots(deg);
  for (unsigned i = 0; i < deg; ++i) roots[i] = solver.eigenvalues()(i);
  return roots;
}

bool root_order(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

// Group raw roots into multiplicity clusters.  Only "stalled" points may
// cluster: near an m-fold zero the iteration stalls with a Newton step
// |P/P'| the size of the stall scatter, while a polished simple root has a
// machine-tiny step — that gap (many orders of magnitude) is what separates
// a genuine multiple zero from a clump of accurate, distinct roots.  Stalled
// points are then linked at radius eff^(1/m) (scatter of an m-fold zero with
// relative residual floor eff), scanning candidate multiplicities from the
// degree downward, and a group is accepted only when it has at least m
// members and its centroid meets the residual certificate.
RootMultiset cluster_roots(const CharacteristicOperator& op, std::vector<Complex> raw,
                           double tolerance, double residual_floor) {
  std::sort(raw.begin(), raw.end(), root_order);
  const double eff = std::max(tolerance, residual_floor);
  const std::size_t n = raw.size();
  const double eps = std::numeric_limits<double>::epsilon();

  std::vector<bool> stalled(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double p = std::abs(op.eval(raw[i]));
    const double dp = std::abs(op.eval_derivative(raw[i]));
    double deriv_scale = 0.0;
    for (std::size_t j = 1; j < op.coefficients.size(); ++j)
      deriv_scale = std::max(deriv_scale,
                             std::abs(op.coefficients[j]) * static_cast<double>(j) *
                                 std::pow(std::max(1.0, std::abs(raw[i])),
                                          static_cast<double>(j - 1)));
    stalled[i] = p > 1e-9 * (1.0 + std::abs(raw[i])) * dp || dp <= 1e3 * eps * deriv_scale;
  }

  RootMultiset out;
  std::vector<bool> assigned(n, false);
  for (std::size_t m = n; m >= 2; --m) {
    const double link = 4.0 * std::pow(eff, 1.0 / static_cast<double>(m));
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack, comp;
    for (std::size_t s = 0; s < n; ++s) {
      if (!stalled[s] || assigned[s] || seen[s]) continue;
      // Connected component of stalled, unassigned points under the link radius.
      comp.clear();
      stack.assign(1, s);
      seen[s] = true;
      while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        comp.push_back(i);
        for (std::size_t j = 0; j < n; ++j) {
          if (!stalled[j] || assigned[j] || seen[j]) continue;
          const double scale = std::max(1.0, std::abs(0.5 * (raw[i] + raw[j])));
          if (std::abs(raw[i] - raw[j]) <= link * scale) {
            seen[j] = true;
            stack.push_back(j);
          }
        }
      }
      if (comp.size() < m) continue;
      Complex centroid{0.0, 0.0};
      for (std::size_t i : comp) centroid += raw[i];
      centroid /= static_cast<double>(comp.size());
      if (std::abs(op.eval(centroid)) > eff * residual_scale(op, centroid)) continue;
      out.roots.push_back({centroid, static_cast<unsigned>(comp.size())});
      for (std::size_t i : comp) assigned[i] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!assigned[i]) out.roots.push_back({raw[i], 1});
  std::sort(out.roots.begin(), out.roots.end(),
            [](const RootMultiset::Entry& a, const RootMultiset::Entry& b) {
              return root_order(a.location, b.location);
            });
  return out;
}

// Adaptive Gauss–Kronrod on the real and imaginary parts separately.
Complex integrate_complex(const std::function<Complex(double)>& f, double lo, double hi,
                          double tol) {
  using boost::math::quadrature::gauss_kronrod;
  const double rel = std::min(tol, 1e-10);
  const double re = gauss_kronrod<double, 15>::integrate(
      [&f](double t) { return f(t).real(); }, lo, hi, 15, rel);
  const double im = gauss_kronrod<double, 15>::integrate(
      [&f](double t) { return f(t).imag(); }, lo, hi, 15, rel);
  return {re, im};
}

}  // namespace

CharacteristicOperator::CharacteristicOperator(std::vector<Complex> a)
    : coefficients(std::move(a)) {
  if (coefficients.size() < 2)
    throw std::domain_error("CharacteristicOperator: degree must be >= 1");
  if (coefficients.back() == Complex(0.0, 0.0))
    throw std::domain_error("CharacteristicOperator: leading coefficient must be nonzero");
}

CharacteristicOperator CharacteristicOperator::from_real(const std::vector<double>& a) {
  std::vector<Complex> c(a.begin(), a.end());
  return CharacteristicOperator(std::move(c));
}

Complex CharacteristicOperator::eval(Complex z) const {
  Complex acc = 0.0;
  for (std::size_t i = coefficients.size(); i-- > 0;) acc = acc * z + coefficients[i];
  return acc;
}

Complex CharacteristicOperator::eval_derivative(Complex z) const {
  Complex acc = 0.0;
  for (std::size_t i = coefficients.size(); i-- > 1;)
    acc = acc * z + coefficients[i] * static_cast<double>(i);
  return acc;
}

TruncatedInfiniteOperator reduce_difference_to_differential(
    const std::vector<Rational>& diff_coeffs, unsigned M) {
  if (diff_coeffs.size() < 2)
    throw std::domain_error("reduce_difference_to_differential: need n >= 1 shifts");
  const unsigned n = static_cast<unsigned>(diff_coeffs.size()) - 1;
  if (M < n) throw std::domain_error("reduce_difference_to_differential: M must be >= n");

  TruncatedInfiniteOperator out;
  out.coefficients.assign(M + 1, Rational(0));
  Rational jfact = 1;
  for (unsigned j = 0; j <= M; ++j) {
    if (j > 0) jfact *= Rational(j);
    Rational acc = 0;
    for (unsigned i = 0; i <= n; ++i) {
      // i^j with 0^0 = 1.
      if (i == 0) {
        if (j == 0) acc += diff_coeffs[0];
        continue;
      }
      BigInt ipow = 1;
      for (unsigned t = 0; t < j; ++t) ipow *= i;
      acc += diff_coeffs[i] * Rational(ipow);
    }
    out.coefficients[j] = acc / jfact;
  }
  return out;
}

RootMultiset polynomial_roots(const CharacteristicOperator& op, double tolerance) {
  if (!(tolerance > 0.0)) throw std::domain_error("polynomial_roots: tolerance must be > 0");
  std::vector<Complex> monic(op.coefficients.size());
  for (std::size_t i = 0; i < monic.size(); ++i)
    monic[i] = op.coefficients[i] / op.coefficients.back();

  auto within_invariant = [&op, tolerance](const RootMultiset& rm) {
    for (const auto& e : rm.roots)
      if (std::abs(op.eval(e.location)) > tolerance * residual_scale(op, e.location))
        return false;
    return true;
  };

  // Relative residual floor the iterations can actually reach; an m-fold zero
  // stalls them at distance ~ floor^(1/m), which sizes the cluster linking.
  double monic_mag = 0.0;
  for (const Complex& c : monic) monic_mag = std::max(monic_mag, std::abs(c));
  const double residual_floor =
      1e3 * std::numeric_limits<double>::epsilon() * (1.0 + monic_mag);

  std::vector<Complex> raw;
  unsigned iterations = 0;
  const bool converged = durand_kerner(monic, raw, iterations);

  if (converged) {
    // Newton polish on well-separated (simple) roots to rounding level.
    for (Complex& r : raw) {
      for (int step = 0; step < 3; ++step) {
        const Complex dp = op.eval_derivative(r);
        if (std::abs(dp) < 1e-8) break;  // near-multiple root: leave to clustering
        r -= op.eval(r) / dp;
      }
    }
    RootMultiset rm = cluster_roots(op, raw, tolerance, residual_floor);
    if (within_invariant(rm)) return rm;
  }

  // Fallback: companion-matrix eigenvalues.
  RootMultiset rm = cluster_roots(op, companion_roots(monic), tolerance, residual_floor);
  if (within_invariant(rm)) return rm;

  double worst = 0.0;
  for (const auto& e : rm.roots)
    worst = std::max(worst,
                     std::abs(op.eval(e.location)) / residual_scale(op, e.location));
  throw RootFindingError(
      "polynomial_roots: residual tolerance not reached (worst relative residual " +
          std::to_string(worst) + " after " + std::to_string(iterations) +
          " simultaneous iterations and companion fallback)",
      iterations, worst);
}

Complex particular_solution_simple(const CharacteristicOperator& op, Complex k,
                                   const SmoothFunction& g, double x_lo, double x,
                                   double quad_tol, Complex homogeneous_coefficient) {
  const double scale = residual_scale(op, k);
  if (std::abs(op.eval(k)) > 1e-6 * scale)
    throw std::domain_error("particular_solution_simple: k is not a zero of P");
  const Complex dp = op.eval_derivative(k);
  if (std::abs(dp) <= 1e-8 * scale)
    throw std::domain_error(
        "particular_solution_simple: k is a multiple zero; only simple zeros are supported");

  const Complex integral = integrate_complex(
      [&g, k](double t) {
        return std::exp(Complex(-k.real() * t, -k.imag() * t)) * g.value(t);
      },
      x_lo, x, quad_tol);
  const Complex ekx = std::exp(Complex(k.real() * x, k.imag() * x));
  return ekx * integral / dp + homogeneous_coefficient * ekx;
}

Complex particular_derivative(const CharacteristicOperator& op, Complex k,
                              const SmoothFunction& g, double x_lo, double x,
                              unsigned order, double quad_tol) {
  // f' = k f + g/P'(k)  =>  f^(m) = k^m f + sum_(j<m) k^(m-1-j) g^(j)(x) / P'(k).
  Complex f = particular_solution_simple(op, k, g, x_lo, x, quad_tol);
  const Complex dp = op.eval_derivative(k);
  for (unsigned m = 1; m <= order; ++m) {
    // Reuse the recursion one order at a time: f_m = k f_(m-1) + g^(m-1)/P'.
    f = k * f + g.derivative(m - 1, x) / dp;
  }
  return f;
}

Complex superposed_particular(const CharacteristicOperator& op, const SmoothFunction& g,
                              double x_lo, double x, double quad_tol,
                              double root_tolerance) {
  const RootMultiset rm = polynomial_roots(op, root_tolerance);
  Complex acc = 0.0;
  for (const auto& e : rm.roots) {
    if (e.multiplicity != 1)
      throw std::domain_error(
          "superposed_particular: operator has a multiple zero; only simple zeros are "
          "supported");
    acc += particular_solution_simple(op, e.location, g, x_lo, x, quad_tol);
  }
  return acc;
}

double residual(const CharacteristicOperator& op, const ComplexDerivatives& f,
                const SmoothFunction& g, const std::vector<double>& sample_points) {
  double worst = 0.0;
  for (const double x : sample_points) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < op.coefficients.size(); ++j)
      acc += op.coefficients[j] * f(static_cast<unsigned>(j), x);
    worst = std::max(worst, std::abs(acc - g.value(x)));
  }
  return worst;
}

double residual(const CharacteristicOperator& op, const SmoothFunction& f,
                const SmoothFunction& g, const std::vector<double>& sample_points) {
  return residual(
      op,
      [&f](unsigned order, double x) { return Complex(f.derivative(order, x), 0.0); }, g,
      sample_points);
}

ComplexDerivatives superposed_derivatives(const CharacteristicOperator& op,
                                          const SmoothFunction& g, double x_lo,
                                          double quad_tol, double root_tolerance) {
  const RootMultiset rm = polynomial_roots(op, root_tolerance);
  for (const auto& e : rm.roots)
    if (e.multiplicity != 1)
      throw std::domain_error(
          "superposed_derivatives: operator has a multiple zero; only simple zeros are "
          "supported");
  std::vector<Complex> roots;
  for (const auto& e : rm.roots) roots.push_back(e.location);
  return [op, g, x_lo, quad_tol, roots](unsigned order, double x) {
    Complex acc = 0.0;
    for (const Complex& k : roots)
      acc += particular_derivative(op, k, g, x_lo, x, order, quad_tol);
    return acc;
  };
}

}  // namespace stirlab
