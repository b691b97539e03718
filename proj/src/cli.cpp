#include "stirlab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "stirlab/bernoulli.hpp"
#include "stirlab/charpoly.hpp"
#include "stirlab/euler_maclaurin.hpp"
#include "stirlab/format.hpp"
#include "stirlab/oracle.hpp"
#include "stirlab/oscillatory.hpp"
#include "stirlab/stirling.hpp"

namespace stirlab {

namespace {

using Row = std::vector<std::pair<std::string, Cell>>;

void emit_report_row(OutputRecord& rec, const EvalReport& r, Row prefix = {}) {
  Row row = std::move(prefix);
  row.emplace_back("value", Cell::number(r.value));
  row.emplace_back("truncation_index", Cell::integer(r.truncation_index));
  row.emplace_back("error_estimate", Cell::number(r.error_estimate));
  row.emplace_back("oracle_value", Cell::number(r.oracle_value));
  row.emplace_back("abs_error", Cell::number(r.abs_error));
  rec.rows.push_back(std::move(row));
}

// Parse "a0,a1,..." into rationals (integers or p/q).
std::vector<Rational> parse_coefficients(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::domain_error("empty coefficient in --coeffs");
    try {
      out.emplace_back(Rational(item));
    } catch (const std::exception&) {
      throw std::domain_error("malformed coefficient '" + item + "' in --coeffs");
    }
  }
  if (out.size() < 2) throw std::domain_error("--coeffs needs at least two entries a0,a1");
  return out;
}

struct CommonArgs {
  double x = 1.0;
  long long max = 15;
  long long modes = 20;
  long long order = 5;
  double tol = 1e-10;
  std::string format = "json";
  std::string g = "log";
  double alpha = 1.0;
  long long from = 1;
  long long to = 10;
  double xlo = 0.0;
  std::string coeffs = "-1,1";
  double s = 2.0;
};

unsigned checked_unsigned(long long v, const char* what) {
  if (v < 0) throw std::domain_error(std::string(what) + " must be nonnegative");
  return static_cast<unsigned>(v);
}

unsigned positive_unsigned(long long v, const char* what) {
  if (v < 1) throw std::domain_error(std::string(what) + " must be >= 1");
  return static_cast<unsigned>(v);
}

OutputRecord cmd_bernoulli(const CommonArgs& a) {
  const unsigned n_max = checked_unsigned(a.max, "--max");
  OutputRecord rec;
  rec.command = "bernoulli";
  rec.inputs.emplace_back("max", Cell::integer(n_max));
  const BernoulliTable table(n_max);
  for (unsigned n = 0; n <= n_max; ++n) {
    rec.rows.push_back(Row{{"n", Cell::integer(n)},
                           {"B_n", Cell::text(to_fraction_string(table.value(n)))}});
  }
  return rec;
}

OutputRecord cmd_zeta(const CommonArgs& a) {
  const unsigned n_max = positive_unsigned(a.max, "--max");
  OutputRecord rec;
  rec.command = "zeta";
  rec.inputs.emplace_back("max", Cell::integer(n_max));
  for (unsigned n = 1; n <= n_max; ++n) {
    const Rational q = zeta_even_coefficient(n);
    const double value = to_double(q) * std::pow(std::numbers::pi, 2.0 * n);
    rec.rows.push_back(Row{{"n", Cell::integer(n)},
                           {"coefficient", Cell::text(to_fraction_string(q))},
                           {"zeta_2n", Cell::number(value)}});
  }
  return rec;
}

OutputRecord cmd_emsum(const CommonArgs& a) {
  const unsigned order = checked_unsigned(a.order, "--order");
  if (a.from > a.to) throw std::domain_error("--from must be <= --to");
  const SmoothFunction g = smooth_by_name(a.g, a.alpha);
  OutputRecord rec;
  rec.command = "emsum";
  rec.inputs.emplace_back("g", Cell::text(a.g));
  if (a.g == "exp") rec.inputs.emplace_back("alpha", Cell::number(a.alpha));
  rec.inputs.emplace_back("from", Cell::integer(a.from));
  rec.inputs.emplace_back("to", Cell::integer(a.to));
  rec.inputs.emplace_back("order", Cell::integer(order));

  const double em = em_sum(g, a.from, a.to, order);
  const double direct = sum_direct(g, a.from, a.to);
  Row row{{"value", Cell::number(em)},
          {"direct_sum", Cell::number(direct)},
          {"abs_diff", Cell::number(std::abs(em - direct))}};
  // Polynomial inputs also get the exact rational result (terminating path).
  if (a.g == "1" || a.g == "x" || a.g == "x^2") {
    RationalPolynomial p;
    if (a.g == "1") p = RationalPolynomial({Rational(1)});
    if (a.g == "x") p = RationalPolynomial({Rational(0), Rational(1)});
    if (a.g == "x^2") p = RationalPolynomial({Rational(0), Rational(0), Rational(1)});
    row.emplace_back("exact",
                     Cell::text(to_fraction_string(em_sum_exact(p, a.from, a.to, order))));
  }
  rec.rows.push_back(std::move(row));
  return rec;
}

OutputRecord cmd_stirling(const CommonArgs& a) {
  const unsigned n_max = positive_unsigned(a.max, "--max");
  OutputRecord rec;
  rec.command = "stirling";
  rec.inputs.emplace_back("x", Cell::number(a.x));
  rec.inputs.emplace_back("max", Cell::integer(n_max));
  emit_report_row(rec, log_gamma_euler(a.x, n_max), Row{{"variant", Cell::text("flawed")}});
  emit_report_row(rec, log_gamma_corrected(a.x, n_max),
                  Row{{"variant", Cell::text("corrected")}});
  return rec;
}

OutputRecord cmd_lgamma(const CommonArgs& a) {
  const unsigned n_max = positive_unsigned(a.max, "--max");
  OutputRecord rec;
  rec.command = "lgamma";
  rec.inputs.emplace_back("x", Cell::number(a.x));
  rec.inputs.emplace_back("max", Cell::integer(n_max));
  emit_report_row(rec, log_gamma_corrected(a.x, n_max));
  return rec;
}

OutputRecord cmd_discrepancy(const CommonArgs& a) {
  OutputRecord rec;
  rec.command = "discrepancy";
  rec.inputs.emplace_back("x", Cell::number(a.x));
  const double d = discrepancy(a.x);
  const double half_log = 0.5 * std::log(a.x);
  rec.rows.push_back(Row{{"value", Cell::number(d)},
                         {"half_log_x", Cell::number(half_log)},
                         {"abs_diff", Cell::number(std::abs(d - half_log))}});
  return rec;
}

OutputRecord cmd_factor_coeffs(const CommonArgs& a) {
  const unsigned m = positive_unsigned(a.max, "--max");
  OutputRecord rec;
  rec.command = "factor-coeffs";
  rec.inputs.emplace_back("m", Cell::integer(m));
  const std::vector<Rational> c = factor_series_coefficients(m);
  for (unsigned j = 0; j < c.size(); ++j) {
    rec.rows.push_back(Row{{"j", Cell::integer(j)},
                           {"c_j", Cell::text(to_fraction_string(c[j]))}});
  }
  return rec;
}

OutputRecord cmd_verify_resum(const CommonArgs& a, bool have_modes) {
  const unsigned n_max = checked_unsigned(a.max, "--max");
  OutputRecord rec;
  rec.command = "verify-resum";
  rec.inputs.emplace_back("x", Cell::number(a.x));
  rec.inputs.emplace_back("max", Cell::integer(n_max));
  if (have_modes) rec.inputs.emplace_back("modes", Cell::integer(a.modes));
  for (unsigned n = 0; n <= n_max; ++n) {
    const ResumCheck c = resum_term_check(n, a.x);
    Row row{{"n", Cell::integer(n)},
            {"lhs", Cell::number(c.lhs)},
            {"rhs", Cell::number(c.rhs)},
            {"abs_diff", Cell::number(std::abs(c.lhs - c.rhs))}};
    if (have_modes) {
      // Direct k-summation truncated at --modes, with its analytic tail bound.
      const ResumCheckDirect d = resum_term_check_direct(
          n, a.x, static_cast<unsigned long>(positive_unsigned(a.modes, "--modes")));
      row.emplace_back("lhs_direct", Cell::number(d.lhs));
      row.emplace_back("tail_bound", Cell::number(d.tail_bound));
    }
    rec.rows.push_back(std::move(row));
  }
  return rec;
}

OutputRecord cmd_solve_ode(const CommonArgs& a) {
  const std::vector<Rational> coeffs = parse_coefficients(a.coeffs);
  std::vector<double> real_coeffs;
  for (const Rational& c : coeffs) real_coeffs.push_back(to_double(c));
  const CharacteristicOperator op = CharacteristicOperator::from_real(real_coeffs);
  const SmoothFunction g = smooth_by_name(a.g, a.alpha);

  OutputRecord rec;
  rec.command = "solve-ode";
  rec.inputs.emplace_back("coeffs", Cell::text(a.coeffs));
  rec.inputs.emplace_back("g", Cell::text(a.g));
  if (a.g == "exp") rec.inputs.emplace_back("alpha", Cell::number(a.alpha));
  rec.inputs.emplace_back("xlo", Cell::number(a.xlo));
  rec.inputs.emplace_back("x", Cell::number(a.x));
  rec.inputs.emplace_back("tol", Cell::number(a.tol));

  const RootMultiset rm = polynomial_roots(op, a.tol);
  for (const auto& e : rm.roots) {
    rec.rows.push_back(Row{{"row", Cell::text("root")},
                           {"root_re", Cell::number(e.location.real())},
                           {"root_im", Cell::number(e.location.imag())},
                           {"multiplicity", Cell::integer(e.multiplicity)},
                           {"basis", Cell::text("exp(k x)")}});
  }

  bool all_simple = true;
  for (const auto& e : rm.roots) all_simple &= e.multiplicity == 1;
  if (all_simple) {
    // Residual of the superposed particular solution over 20 sample points
    // between xlo and x.
    const ComplexDerivatives f = superposed_derivatives(op, g, a.xlo, a.tol, a.tol);
    std::vector<double> samples;
    for (int i = 1; i <= 20; ++i)
      samples.push_back(a.xlo + (a.x - a.xlo) * i / 20.0);
    const double res = residual(op, f, g, samples);
    rec.rows.push_back(Row{{"row", Cell::text("residual_max")},
                           {"value", Cell::number(res)}});
  } else {
    rec.rows.push_back(Row{{"row", Cell::text("note")},
                           {"value", Cell::text("multiple zero present; particular solution "
                                                "formula requires simple zeros")}});
  }
  return rec;
}

OutputRecord cmd_oracle(const CommonArgs& a, bool have_x, bool have_s) {
  OutputRecord rec;
  rec.command = "oracle";
  if (have_s && !have_x) {
    const unsigned long K = static_cast<unsigned long>(positive_unsigned(a.max, "--max"));
    rec.inputs.emplace_back("s", Cell::number(a.s));
    rec.inputs.emplace_back("max", Cell::integer(static_cast<long long>(K)));
    const OracleValue v = zeta_direct(a.s, K);
    rec.rows.push_back(Row{{"quantity", Cell::text("zeta_direct")},
                           {"value", Cell::number(v.value)},
                           {"guaranteed_abs_error", Cell::number(v.guaranteed_abs_error)},
                           {"method", Cell::text(v.method)}});
    return rec;
  }
  rec.inputs.emplace_back("x", Cell::number(a.x));
  const OracleValue v = lgamma_ref(a.x);
  rec.rows.push_back(Row{{"quantity", Cell::text("lgamma_ref")},
                         {"value", Cell::number(v.value)},
                         {"guaranteed_abs_error", Cell::number(v.guaranteed_abs_error)},
                         {"method", Cell::text(v.method)}});
  return rec;
}

OutputRecord cmd_constant_claim(const CommonArgs& a) {
  const unsigned n_max = positive_unsigned(a.max, "--max");
  OutputRecord rec;
  rec.command = "constant-claim";
  rec.inputs.emplace_back("max", Cell::integer(n_max));
  emit_report_row(rec, euler_constant_claim(n_max));
  return rec;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stirling-series laboratory: exact Bernoulli numbers, the inverse-shift "
               "operator, the flawed and corrected log-Stirling series, oscillatory-mode "
               "resummation, and reference oracles."};
  app.require_subcommand(1);

  CommonArgs a;
  bool have_x = false, have_s = false;

  auto add_common = [&](CLI::App* sub, bool with_format = true) {
    if (with_format)
      sub->add_option("--format", a.format, "Output format: json, csv, or text")
          ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  CLI::App* bern = app.add_subcommand("bernoulli", "Exact Bernoulli numbers B_0..B_max");
  bern->add_option("--max", a.max, "Largest index (default 15)");
  add_common(bern);

  CLI::App* zeta = app.add_subcommand(
      "zeta", "Exact coefficients q with zeta(2n) = q pi^(2n), n = 1..max");
  zeta->add_option("--max", a.max, "Largest n (default 15)");
  add_common(zeta);

  CLI::App* emsum = app.add_subcommand(
      "emsum", "Euler-Maclaurin summation of g(k) for k = from..to vs direct summation");
  emsum->add_option("--g", a.g, "Function: 1, x, x^2, exp, log, 1/x (default log)");
  emsum->add_option("--alpha", a.alpha, "Rate for g = exp (default 1)");
  emsum->add_option("--from", a.from, "Lower summation index (default 1)");
  emsum->add_option("--to", a.to, "Upper summation index (default 10)");
  emsum->add_option("--order", a.order, "Derivative truncation order (default 5)");
  add_common(emsum);

  CLI::App* stirling = app.add_subcommand(
      "stirling", "Flawed and corrected log-Stirling evaluations at x");
  stirling->add_option("--x", a.x, "Evaluation point (default 1)")->required();
  stirling->add_option("--max", a.max, "Series terms housed (default 15)");
  add_common(stirling);

  CLI::App* lgamma = app.add_subcommand(
      "lgamma", "Corrected log-Stirling value of log Gamma(x) vs the oracle");
  lgamma->add_option("--x", a.x, "Evaluation point (default 1)")->required();
  lgamma->add_option("--max", a.max, "Series terms housed (default 15)");
  add_common(lgamma);

  CLI::App* disc = app.add_subcommand(
      "discrepancy", "Flawed-minus-corrected difference; equals half log x");
  disc->add_option("--x", a.x, "Evaluation point (default 1)")->required();
  add_common(disc);

  CLI::App* factor = app.add_subcommand(
      "factor-coeffs", "Exact coefficients of the multiplicative Stirling correction");
  factor->add_option("--max,--m,-m", a.max, "Largest power of 1/x (default 15)");
  add_common(factor);

  CLI::App* resum = app.add_subcommand(
      "verify-resum", "Per-n resummation identity table (n, lhs, rhs, abs diff)");
  resum->add_option("--x", a.x, "Evaluation point (default 1)");
  resum->add_option("--max", a.max, "Largest n (default 15)");
  bool have_modes = false;
  resum->add_option("--modes", a.modes, "Also sum k = 1..modes directly (default 20)")
      ->each([&](const std::string&) { have_modes = true; });
  add_common(resum);

  CLI::App* ode = app.add_subcommand(
      "solve-ode", "Roots and superposed particular solution of a0 f + a1 f' + ... = g");
  ode->add_option("--coeffs", a.coeffs, "Operator coefficients a0,a1,... (default -1,1)");
  ode->add_option("--g", a.g, "Forcing: 1, x, x^2, exp, log, 1/x (default log)");
  ode->add_option("--alpha", a.alpha, "Rate for g = exp (default 1)");
  ode->add_option("--xlo", a.xlo, "Lower integration limit (default 0)");
  ode->add_option("--x", a.x, "Upper sample point (default 1)");
  ode->add_option("--tol", a.tol, "Root/quadrature tolerance (default 1e-10)");
  add_common(ode);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Reference values: lgamma_ref at --x, or zeta_direct at --s with K = --max");
  oracle->add_option("--x", a.x, "Evaluate log Gamma(x)")->each([&](const std::string&) {
    have_x = true;
  });
  oracle->add_option("--s", a.s, "Evaluate sum k^-s, k = 1..max")->each(
      [&](const std::string&) { have_s = true; });
  oracle->add_option("--max", a.max, "Number of direct-sum terms (default 15)");
  add_common(oracle);

  CLI::App* claim = app.add_subcommand(
      "constant-claim", "Optimally truncated 1 - sum B_2n/((2n-1)2n) vs half log(2 pi)");
  claim->add_option("--max", a.max, "Series terms housed (default 15)");
  add_common(claim);

  std::vector<std::string> argv_copy(args);
  try {
    // CLI11 parses reversed argv vectors.
    std::reverse(argv_copy.begin(), argv_copy.end());
    app.parse(argv_copy);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    OutputRecord rec;
    if (bern->parsed()) rec = cmd_bernoulli(a);
    else if (zeta->parsed()) rec = cmd_zeta(a);
    else if (emsum->parsed()) rec = cmd_emsum(a);
    else if (stirling->parsed()) rec = cmd_stirling(a);
    else if (lgamma->parsed()) rec = cmd_lgamma(a);
    else if (disc->parsed()) rec = cmd_discrepancy(a);
    else if (factor->parsed()) rec = cmd_factor_coeffs(a);
    else if (resum->parsed()) rec = cmd_verify_resum(a, have_modes);
    else if (ode->parsed()) rec = cmd_solve_ode(a);
    else if (oracle->parsed()) rec = cmd_oracle(a, have_x, have_s);
    else if (claim->parsed()) rec = cmd_constant_claim(a);
    out << rec.serialize(a.format);
    return 0;
  } catch (const RootFindingError& e) {
    err << "computational failure: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "computational failure: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace stirlab
