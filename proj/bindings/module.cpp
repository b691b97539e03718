// Python bindings for the main operations.  Exact rationals cross the
// boundary as fractions.Fraction (constructed from the exact "p/q" string),
// so no precision is lost on the way out.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stirlab/bernoulli.hpp"
#include "stirlab/charpoly.hpp"
#include "stirlab/euler_maclaurin.hpp"
#include "stirlab/oracle.hpp"
#include "stirlab/oscillatory.hpp"
#include "stirlab/smooth_function.hpp"
#include "stirlab/stirling.hpp"

namespace py = pybind11;

namespace {

py::object make_fraction(const stirlab::Rational& r) {
  static py::object fraction_type =
      py::module_::import("fractions").attr("Fraction");
  return fraction_type(stirlab::to_fraction_string(r));
}

py::list fraction_list(const std::vector<stirlab::Rational>& values) {
  py::list out;
  for (const auto& v : values) out.append(make_fraction(v));
  return out;
}

py::dict report_dict(const stirlab::EvalReport& r) {
  py::dict d;
  d["value"] = r.value;
  d["truncation_index"] = r.truncation_index;
  d["error_estimate"] = r.error_estimate;
  d["oracle_value"] = r.oracle_value;
  d["abs_error"] = r.abs_error;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stirling-series laboratory: exact Bernoulli arithmetic, the "
            "Euler-Maclaurin inverse-shift operator, the flawed and corrected "
            "log-Stirling series, and the oscillatory-mode resummation.";

  m.def("bernoulli", [](unsigned n) { return make_fraction(stirlab::bernoulli(n)); },
        py::arg("n"), "Exact B_n as fractions.Fraction (B_1 = -1/2 convention).");
  m.def("zeta_even_coefficient",
        [](unsigned n) { return make_fraction(stirlab::zeta_even_coefficient(n)); },
        py::arg("n"), "Exact q with zeta(2n) = q * pi**(2n).");
  m.def("binomial",
        [](unsigned n, unsigned k) {
          // Arbitrary-precision safe: hand python the decimal string.
          return py::module_::import("builtins").attr("int")(stirlab::binomial(n, k).str());
        },
        py::arg("n"), py::arg("k"), "Exact C(n, k) as a python int.");

  m.def("stirling_terms", &stirlab::stirling_terms, py::arg("x"), py::arg("n_max"),
        "Series terms B_2n/((2n-1) 2n x^(2n-1)) for n = 1..n_max.");
  m.def("optimal_truncation", &stirlab::optimal_truncation, py::arg("terms"),
        "1-based index of the smallest-magnitude term (first occurrence).");
  m.def("log_gamma_euler",
        [](double x, unsigned n_max) { return report_dict(stirlab::log_gamma_euler(x, n_max)); },
        py::arg("x"), py::arg("n_max") = 15,
        "Historically flawed log-Stirling evaluation (constant log sqrt(2 pi)).");
  m.def("log_gamma_corrected",
        [](double x, unsigned n_max) {
          return report_dict(stirlab::log_gamma_corrected(x, n_max));
        },
        py::arg("x"), py::arg("n_max") = 15,
        "Corrected log-Stirling evaluation (constant log sqrt(2 pi / x)).");
  m.def("discrepancy", &stirlab::discrepancy, py::arg("x"),
        "Flawed minus corrected; equals 0.5*log(x).");
  m.def("factor_series_coefficients",
        [](unsigned m_) { return fraction_list(stirlab::factor_series_coefficients(m_)); },
        py::arg("m"), "Exact coefficients c_0..c_m of the multiplicative correction.");
  m.def("euler_constant_claim",
        [](unsigned n_max) { return report_dict(stirlab::euler_constant_claim(n_max)); },
        py::arg("n_max") = 15,
        "Optimally truncated 1 - sum B_2n/((2n-1)2n) vs 0.5*log(2 pi).");

  m.def("em_sum",
        [](const std::string& g, long long a, long long b, unsigned order, double alpha) {
          return stirlab::em_sum(stirlab::smooth_by_name(g, alpha), a, b, order);
        },
        py::arg("g"), py::arg("a"), py::arg("b"), py::arg("order") = 5,
        py::arg("alpha") = 1.0,
        "Euler-Maclaurin summation of g(k), k = a..b (g: 1, x, x^2, exp, log, 1/x).");
  m.def("em_antidifference",
        [](const std::string& g, double x, unsigned order, bool include_constant_term,
           double alpha) {
          return stirlab::em_antidifference(stirlab::smooth_by_name(g, alpha), x, order,
                                            include_constant_term);
        },
        py::arg("g"), py::arg("x"), py::arg("order") = 5,
        py::arg("include_constant_term") = true, py::arg("alpha") = 1.0,
        "Truncated antidifference F with F(x+1) - F(x) ~ g(x).");

  m.def("expm1_zeros", &stirlab::expm1_zeros, py::arg("K"),
        "Zeros of e^z - 1: 0 and ±2k pi i for k = 1..K.");
  m.def("paired_mode_real", &stirlab::paired_mode_real, py::arg("k"), py::arg("x"),
        py::arg("n_max"), "Real value of the ±k mode pair (C_k = 0).");
  m.def("resum_term_check",
        [](unsigned n, double x) {
          const stirlab::ResumCheck c = stirlab::resum_term_check(n, x);
          return py::make_tuple(c.lhs, c.rhs);
        },
        py::arg("n"), py::arg("x"),
        "(lhs, rhs) of the per-n resummation identity; equal up to rounding.");

  m.def("reduce_difference_to_differential",
        [](const std::vector<std::string>& diff_coeffs, unsigned M) {
          std::vector<stirlab::Rational> a;
          for (const auto& s : diff_coeffs) a.emplace_back(s);
          return fraction_list(stirlab::reduce_difference_to_differential(a, M).coefficients);
        },
        py::arg("diff_coeffs"), py::arg("M"),
        "Taylor reduction A_j = sum_i a_i i^j/j! (coefficients as 'p/q' strings).");
  m.def("polynomial_roots",
        [](const std::vector<std::complex<double>>& coeffs, double tolerance) {
          const stirlab::RootMultiset rm = stirlab::polynomial_roots(
              stirlab::CharacteristicOperator(
                  std::vector<stirlab::Complex>(coeffs.begin(), coeffs.end())),
              tolerance);
          py::list out;
          for (const auto& e : rm.roots) out.append(py::make_tuple(e.location, e.multiplicity));
          return out;
        },
        py::arg("coeffs"), py::arg("tolerance") = 1e-10,
        "[(root, multiplicity)] of sum_j coeffs[j] z^j, deterministically ordered.");

  m.def("lgamma_ref",
        [](double x) {
          const stirlab::OracleValue v = stirlab::lgamma_ref(x);
          return py::make_tuple(v.value, v.guaranteed_abs_error, v.method);
        },
        py::arg("x"), "(value, guaranteed_abs_error, method) for log Gamma(x).");
  m.def("zeta_direct",
        [](double s, unsigned long K) {
          const stirlab::OracleValue v = stirlab::zeta_direct(s, K);
          return py::make_tuple(v.value, v.guaranteed_abs_error, v.method);
        },
        py::arg("s"), py::arg("K"), "(value, tail_bound, method) of sum k^-s, k = 1..K.");
  m.def("sum_direct",
        [](const std::string& g, long long a, long long b, double alpha) {
          return stirlab::sum_direct(stirlab::smooth_by_name(g, alpha), a, b);
        },
        py::arg("g"), py::arg("a"), py::arg("b"), py::arg("alpha") = 1.0,
        "Compensated direct summation of g(k), k = a..b.");
}
