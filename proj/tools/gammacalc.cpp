// gammacalc: command-line calculator for exact gamma values at rationals.
//
// Subcommands:
//   reduce x          closed form of Gamma(x) over the ten-value basis
//   simplify expr     exact closed form of a gamma-term expression
//   gauss a b c       closed form of 2F1(a,b;c;1)
//   beta a b          closed form of B(a,b)
//   eval expr         certified numeric enclosure of an expression
//   table n           all reduction formulas with denominator n
//   kubert-rank N     minimal generating count phi(N)/2
//   verify-all        full verification sweep with a pass/fail summary
//
// Global flags --digits and --format work on every subcommand; write `--`
// before positionals that begin with a minus sign (e.g. gauss -- 1/4 -1/12
// 2/3). Exit codes: 0 success; 1 domain error, reported as one `error: ...`
// line on stderr; 2 usage or expression-syntax error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "gammacalc/bigfloat.hpp"
#include "gammacalc/errors.hpp"
#include "gammacalc/expr.hpp"
#include "gammacalc/hypergeometric.hpp"
#include "gammacalc/monomial.hpp"
#include "gammacalc/numeric.hpp"
#include "gammacalc/rational.hpp"
#include "gammacalc/relations.hpp"
#include "gammacalc/trig.hpp"

namespace {

using namespace gammacalc;

struct Options {
  int digits = 50;
  std::string format = "text";
};

std::string sci(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " ";
    out += parts[i];
  }
  return out;
}

std::string render_monomial(const Monomial& m, const std::string& fmt) {
  if (fmt == "json") return m.render_json();
  if (fmt == "latex") return m.render_latex();
  return m.render_text();
}

// Prints `s` with exactly one trailing newline.
void emit(const std::string& s) {
  std::string t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  std::cout << t << "\n";
}

Rational require_rational(const std::string& text, const char* role) {
  auto q = parse_rational(text);
  if (!q)
    throw SyntaxError(1, std::string("a rational for ") + role +
                             " (got '" + text + "')");
  return *q;
}

// Upper bound on |ratio - 1|.
double deviation_bound(const BigBall& ratio) {
  const BigBall shifted = ratio.sub(BigBall::from_long(1, ratio.precision()));
  return std::abs(shifted.mid_double()) + shifted.rad_double();
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int cmd_reduce(const std::string& arg, const Options& opt) {
  emit(render_monomial(reduce(require_rational(arg, "x")), opt.format));
  return 0;
}

int cmd_simplify(const std::vector<std::string>& parts, const Options& opt) {
  const GammaTermExpr tree = parse_expr(join(parts));
  emit(render_monomial(tree.simplify(), opt.format));
  return 0;
}

int cmd_gauss(const std::string& a, const std::string& b, const std::string& c,
              const Options& opt) {
  const HypergeometricSpec spec{require_rational(a, "a"),
                                require_rational(b, "b"),
                                require_rational(c, "c")};
  emit(render_monomial(gauss_value(spec), opt.format));
  return 0;
}

int cmd_beta(const std::string& a, const std::string& b, const Options& opt) {
  emit(render_monomial(
      beta_value(require_rational(a, "a"), require_rational(b, "b")),
      opt.format));
  return 0;
}

int cmd_eval(const std::vector<std::string>& parts, const Options& opt) {
  const GammaTermExpr tree = parse_expr(join(parts));
  const BigBall v = tree.eval({opt.digits, 10});
  const std::string mid = v.mid_string(opt.digits);
  const std::string rad = v.rad_string();
  if (opt.format == "json")
    emit("{\"midpoint\": \"" + mid + "\", \"radius\": \"" + rad + "\"}");
  else if (opt.format == "latex")
    emit(mid + " \\pm " + rad);
  else
    emit(mid + " +/- " + rad);
  return 0;
}

int cmd_table(long n, const Options& opt) {
  std::map<Rational, Monomial, RationalLess> rows;
  if (n >= 2 && (24 % n == 0 || 60 % n == 0)) {
    for (const auto& [x, m] : reduction_table().entries())
      if (x.get_den() == n) rows.emplace(x, m);
  } else if (n == 40 || n == 120) {
    for (auto& [x, m] : extend_to_120())
      if (x.get_den() == n) rows.emplace(x, std::move(m));
  } else {
    throw UnsupportedDenominator(
        "unsupported denominator " + std::to_string(n) +
        ": it divides none of 24, 60, 120");
  }
  if (opt.format == "json") {
    emit(reduction_table_json(ReductionTable(std::move(rows))));
  } else if (opt.format == "latex") {
    emit(reduction_table_latex(ReductionTable(std::move(rows))));
  } else {
    std::string out;
    for (const auto& [x, m] : rows)
      out += "Gamma(" + to_string(x) + ") = " + m.render_text() + "\n";
    emit(out);
  }
  return 0;
}

int cmd_kubert_rank(long n) {
  std::cout << kubert_rank(n) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify-all
// ---------------------------------------------------------------------------

struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::string detail;
};

CheckOutcome check_table_sweep(const PrecisionConfig& cfg) {
  double max_dev = 0.0;
  Rational worst;
  int points = 0;
  for (const auto& [x, m] : reduction_table().entries()) {
    const double dev =
        deviation_bound(eval_monomial(m, cfg).div(gamma_numeric(x, cfg)));
    if (dev > max_dev) {
      max_dev = dev;
      worst = x;
    }
    ++points;
  }
  const double tol = std::pow(10.0, -(cfg.decimal_digits - 5));
  return {"reduction-table-sweep", max_dev < tol,
          std::to_string(points) + " points, max deviation " + sci(max_dev) +
              " at Gamma(" + to_string(worst) + "), tolerance " + sci(tol)};
}

CheckOutcome check_derivation() {
  const bool equal = derive_table() == reduction_table();
  const auto n = reduction_table().entries().size();
  return {"derivation-matches-table", equal,
          std::to_string(n) + " entries compared exactly" +
              (equal ? "" : "; derivation disagreed")};
}

CheckOutcome check_lemma_tables() {
  const CheckReport r = verify_lemma_tables();
  std::string detail =
      std::to_string(r.checks) + " checks, " +
      std::to_string(r.failures.size()) + " failures";
  if (!r.failures.empty()) detail += "; first: " + r.failures.front();
  return {"unit-circle-tables", r.ok(), detail};
}

CheckOutcome check_kubert_ranks() {
  const long ns[] = {3, 5, 24, 60, 120};
  const int expected[] = {1, 2, 4, 8, 16};
  std::string got;
  bool pass = true;
  for (int i = 0; i < 5; ++i) {
    const int r = kubert_rank(ns[i]);
    if (i) got += ",";
    got += std::to_string(r);
    pass = pass && r == expected[i];
  }
  return {"kubert-ranks", pass,
          "N=3,5,24,60,120 -> " + got + " (expected 1,2,4,8,16)"};
}

CheckOutcome check_elliptic(const PrecisionConfig& cfg) {
  const EllipticReport r = verify_elliptic_formulas(cfg);
  return {"elliptic-formulas", r.all_pass,
          std::to_string(r.formulas.size()) + " formulas, max deviation " +
              sci(r.max_relative_deviation) + ", tolerance " +
              sci(r.tolerance)};
}

CheckOutcome check_hyperelliptic(const PrecisionConfig& cfg) {
  const BigBall h1 = hyperelliptic_H(1, cfg);
  const BigBall h2 = hyperelliptic_H(2, cfg);
  const Monomial beta1 = beta_value(make_rational(1, 5), make_rational(1, 2));
  const Monomial beta2 = beta_value(make_rational(2, 5), make_rational(1, 2));
  const double dev1 =
      deviation_bound(h1.mul_rational(Rational(5)).div(eval_monomial(beta1, cfg)));
  const double dev2 =
      deviation_bound(h2.mul_rational(Rational(5)).div(eval_monomial(beta2, cfg)));
  const double max_dev = std::max(dev1, dev2);
  const double tol = std::pow(10.0, -(cfg.decimal_digits - 10));

  // Exact rebuild of Gamma(1/5), Gamma(2/5) from the period pair h_j = B/5.
  const Monomial h1m = beta1.mul_rational(make_rational(1, 5));
  const Monomial h2m = beta2.mul_rational(make_rational(1, 5));
  const bool fifth_exact =
      Monomial::pi_power(make_rational(1, 5))
              .mul(parse_monomial_product("2^19/50 5^1/2 phi^1/10"))
              .mul(h1m.pow(make_rational(2, 5)))
              .mul(h2m.pow(make_rational(1, 5))) ==
          Monomial::gamma_power(make_rational(1, 5)) &&
      Monomial::pi_power(make_rational(2, 5))
              .mul(parse_monomial_product("2^4/25 phi^1/5"))
              .mul(h1m.pow(make_rational(-1, 5)))
              .mul(h2m.pow(make_rational(2, 5))) ==
          Monomial::gamma_power(make_rational(2, 5));

  return {"hyperelliptic-periods", max_dev < tol && fifth_exact,
          "period pair vs beta, max deviation " + sci(max_dev) +
              ", tolerance " + sci(tol) + "; fifth-gamma rebuild exact: " +
              (fifth_exact ? "yes" : "no")};
}

CheckOutcome check_gauss_values() {
  double max_dev = 0.0;
  bool surds_ok = true;
  const PrecisionConfig series_cfg{15, 10};  // series oracle term budget
  for (const GaussSelfCheck& sc : gauss_selfchecks()) {
    const Monomial closed = gauss_value(sc.spec);
    surds_ok = surds_ok && closed == parse_monomial_product(sc.surd_product);
    max_dev = std::max(
        max_dev, deviation_bound(eval_monomial(closed, series_cfg)
                                     .div(gauss_numeric(sc.spec, series_cfg))));
  }
  return {"gauss-unit-values", max_dev < 1e-12 && surds_ok,
          "4 evaluations, max series deviation " + sci(max_dev) +
              ", tolerance 1.00e-12; surd forms exact: " +
              (surds_ok ? "yes" : "no")};
}

int cmd_verify_all(const Options& opt) {
  const PrecisionConfig cfg{opt.digits, 10};
  std::vector<CheckOutcome> results;
  results.push_back(check_table_sweep(cfg));
  results.push_back(check_derivation());
  results.push_back(check_lemma_tables());
  results.push_back(check_kubert_ranks());
  results.push_back(check_elliptic(cfg));
  results.push_back(check_hyperelliptic(cfg));
  results.push_back(check_gauss_values());

  std::size_t passed = 0;
  for (const CheckOutcome& r : results) {
    std::string name = r.name;
    if (name.size() < 26) name.resize(26, ' ');
    std::cout << (r.pass ? "PASS  " : "FAIL  ") << name << r.detail << "\n";
    if (r.pass) ++passed;
  }
  std::cout << "SUMMARY " << passed << "/" << results.size()
            << " checks passed\n";
  if (passed != results.size()) {
    std::cerr << "error: verification failed (" << results.size() - passed
              << " of " << results.size() << " checks)\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact calculator for gamma values at rationals with denominator "
      "dividing 24, 60, or 120"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--digits", opt.digits, "Working decimal precision")
      ->check(CLI::Range(2, 1000))
      ->capture_default_str();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();

  std::string reduce_arg;
  CLI::App* sub_reduce = app.add_subcommand(
      "reduce", "Closed form of Gamma(x) over the ten-value basis");
  sub_reduce->add_option("x", reduce_arg, "Rational argument k/n")->required();

  std::vector<std::string> simplify_parts;
  CLI::App* sub_simplify = app.add_subcommand(
      "simplify", "Exact closed form of a gamma-term expression");
  sub_simplify
      ->add_option("expr", simplify_parts,
                   "Expression, e.g. \"Gamma(1/3)^2 * Gamma(2/3) / pi\"")
      ->required()
      ->expected(-1);

  std::string gauss_a, gauss_b, gauss_c;
  CLI::App* sub_gauss = app.add_subcommand(
      "gauss", "Closed form of 2F1(a,b;c;1) via the gamma quotient");
  sub_gauss->add_option("a", gauss_a, "Upper parameter")->required();
  sub_gauss->add_option("b", gauss_b, "Upper parameter")->required();
  sub_gauss->add_option("c", gauss_c, "Lower parameter")->required();

  std::string beta_a, beta_b;
  CLI::App* sub_beta = app.add_subcommand("beta", "Closed form of B(a,b)");
  sub_beta->add_option("a", beta_a, "First argument")->required();
  sub_beta->add_option("b", beta_b, "Second argument")->required();

  std::vector<std::string> eval_parts;
  CLI::App* sub_eval = app.add_subcommand(
      "eval", "Certified numeric enclosure of a gamma-term expression");
  sub_eval->add_option("expr", eval_parts, "Expression to evaluate")
      ->required()
      ->expected(-1);

  long table_den = 0;
  CLI::App* sub_table = app.add_subcommand(
      "table", "Reduction formulas for one denominator");
  sub_table->add_option("denominator", table_den, "2..60 dividing 24 or 60, or 40/120")
      ->required();

  long kubert_n = 0;
  CLI::App* sub_kubert = app.add_subcommand(
      "kubert-rank", "Minimal generating count phi(N)/2 for denominator N");
  sub_kubert->add_option("N", kubert_n, "Modulus, N >= 3")->required();

  CLI::App* sub_verify = app.add_subcommand(
      "verify-all", "Run the full verification sweep and print a summary");

  for (CLI::App* s : {sub_reduce, sub_simplify, sub_gauss, sub_beta, sub_eval,
                      sub_table, sub_kubert, sub_verify})
    s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (sub_reduce->parsed()) return cmd_reduce(reduce_arg, opt);
    if (sub_simplify->parsed()) return cmd_simplify(simplify_parts, opt);
    if (sub_gauss->parsed()) return cmd_gauss(gauss_a, gauss_b, gauss_c, opt);
    if (sub_beta->parsed()) return cmd_beta(beta_a, beta_b, opt);
    if (sub_eval->parsed()) return cmd_eval(eval_parts, opt);
    if (sub_table->parsed()) return cmd_table(table_den, opt);
    if (sub_kubert->parsed()) return cmd_kubert_rank(kubert_n);
    if (sub_verify->parsed()) return cmd_verify_all(opt);
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
