#include "gammacalc/expr.hpp"

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "gammacalc/bigfloat.hpp"
#include "gammacalc/errors.hpp"
#include "gammacalc/monomial.hpp"
#include "gammacalc/numeric.hpp"
#include "gammacalc/rational.hpp"

using namespace gammacalc;

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

ExprFactor gamma_factor(long kn, long kd, long en, long ed = 1) {
  return {ExprFactor::Kind::kGamma, Q(kn, kd), Q(en, ed)};
}

ExprFactor pi_factor(long en, long ed = 1) {
  return {ExprFactor::Kind::kPi, Rational(0), Q(en, ed)};
}

ExprFactor num_factor(long vn, long vd, long en, long ed = 1) {
  return {ExprFactor::Kind::kNumber, Q(vn, vd), Q(en, ed)};
}

// Offset and expected-token description of the SyntaxError raised by text.
std::pair<std::size_t, std::string> syntax_failure(const std::string& text) {
  try {
    parse_expr(text);
  } catch (const SyntaxError& e) {
    return {e.offset, e.expected};
  }
  FAIL(("expected a syntax error for: " + text));
  return {0, ""};
}

}  // namespace

TEST_CASE("expression parser handles the documented forms") {
  const GammaTermExpr t1 = parse_expr("Gamma(1/3)^2 * Gamma(2/3) / pi");
  REQUIRE(t1.factors.size() == 3);
  CHECK(t1.factors[0] == gamma_factor(1, 3, 2));
  CHECK(t1.factors[1] == gamma_factor(2, 3, 1));
  CHECK(t1.factors[2] == pi_factor(-1));

  const GammaTermExpr t2 = parse_expr("Gamma(1/2)");
  REQUIRE(t2.factors.size() == 1);
  CHECK(t2.factors[0] == gamma_factor(1, 2, 1));

  const auto [off, expected] = syntax_failure("Gamma(1/3");
  CHECK(off == 10);
  CHECK(expected == ")");
}

TEST_CASE("expression grammar details") {
  SUBCASE("whitespace between tokens is ignored") {
    CHECK(parse_expr("  Gamma( 1/3 ) ^ 2*pi ") == parse_expr("Gamma(1/3)^2 * pi"));
  }
  SUBCASE("a slash inside a rational binds tighter than division") {
    const GammaTermExpr ratio = parse_expr("2/3");
    REQUIRE(ratio.factors.size() == 1);
    CHECK(ratio.factors[0] == num_factor(2, 3, 1));

    const GammaTermExpr division = parse_expr("2 / 3");
    REQUIRE(division.factors.size() == 2);
    CHECK(division.factors[0] == num_factor(2, 1, 1));
    CHECK(division.factors[1] == num_factor(3, 1, -1));

    // Without a digit right after it, the slash is the division operator.
    CHECK(parse_expr("2/ 3") == division);
  }
  SUBCASE("exponents are single rational tokens") {
    const GammaTermExpr half = parse_expr("pi^1/2");
    REQUIRE(half.factors.size() == 1);
    CHECK(half.factors[0] == pi_factor(1, 2));
    CHECK(parse_expr("Gamma(-1/2)^-2").factors[0] == gamma_factor(-1, 2, -2));
  }
  SUBCASE("parentheses distribute over the product") {
    const GammaTermExpr squared = parse_expr("(pi * 2)^2");
    REQUIRE(squared.factors.size() == 2);
    CHECK(squared.factors[0] == pi_factor(2));
    CHECK(squared.factors[1] == num_factor(2, 1, 2));

    const GammaTermExpr inverted = parse_expr("1 / (pi * Gamma(1/3))");
    REQUIRE(inverted.factors.size() == 3);
    CHECK(inverted.factors[0] == num_factor(1, 1, 1));
    CHECK(inverted.factors[1] == pi_factor(-1));
    CHECK(inverted.factors[2] == gamma_factor(1, 3, -1));

    CHECK(parse_expr("pi / (2 / Gamma(1/4))^3").factors ==
          std::vector<ExprFactor>{pi_factor(1), num_factor(2, 1, -3),
                                  gamma_factor(1, 4, 3)});
  }
  SUBCASE("division applies after the exponent of the following term") {
    const GammaTermExpr t = parse_expr("pi / 2^3");
    CHECK(t.factors[1] == num_factor(2, 1, -3));
  }
}

TEST_CASE("syntax errors carry a 1-based offset and the expected token") {
  CHECK(syntax_failure("") ==
        std::pair<std::size_t, std::string>{1, "'Gamma', 'pi', a rational, or '('"});
  CHECK(syntax_failure("Gamma") ==
        std::pair<std::size_t, std::string>{6, "'('"});
  CHECK(syntax_failure("Gamma(") ==
        std::pair<std::size_t, std::string>{7, "a rational"});
  CHECK(syntax_failure("Gamma(x)") ==
        std::pair<std::size_t, std::string>{7, "a rational"});
  CHECK(syntax_failure("pi pi") ==
        std::pair<std::size_t, std::string>{4, "'*', '/', or end of input"});
  CHECK(syntax_failure("2 ** 3") ==
        std::pair<std::size_t, std::string>{4, "'Gamma', 'pi', a rational, or '('"});
  CHECK(syntax_failure("Gamma(1/0)") ==
        std::pair<std::size_t, std::string>{9, "a nonzero denominator"});
  CHECK(syntax_failure("(pi") == std::pair<std::size_t, std::string>{4, ")"});
  CHECK(syntax_failure("pi^") ==
        std::pair<std::size_t, std::string>{4, "a rational exponent"});
  CHECK(syntax_failure("pie") ==
        std::pair<std::size_t, std::string>{1, "'Gamma', 'pi', a rational, or '('"});
}

TEST_CASE("random trees survive the render/parse round trip") {
  std::mt19937 rng(20260819u);
  std::uniform_int_distribution<int> kind_pick(0, 2);
  std::uniform_int_distribution<int> count_pick(1, 6);
  std::uniform_int_distribution<long> num_pick(-30, 30);
  std::uniform_int_distribution<long> den_pick(1, 30);
  std::uniform_int_distribution<long> exp_num_pick(-24, 24);
  std::uniform_int_distribution<long> exp_den_pick(1, 12);

  for (int trial = 0; trial < 300; ++trial) {
    GammaTermExpr tree;
    const int count = count_pick(rng);
    for (int i = 0; i < count; ++i) {
      ExprFactor f;
      f.exponent = Q(exp_num_pick(rng), exp_den_pick(rng));
      switch (kind_pick(rng)) {
        case 0:
          f.kind = ExprFactor::Kind::kGamma;
          f.value = Q(num_pick(rng), den_pick(rng));
          break;
        case 1:
          f.kind = ExprFactor::Kind::kPi;
          f.value = Rational(0);
          break;
        default: {
          f.kind = ExprFactor::Kind::kNumber;
          long v = num_pick(rng);
          f.value = Q(v == 0 ? 7 : v, den_pick(rng));
          break;
        }
      }
      tree.factors.push_back(std::move(f));
    }
    const std::string text = tree.render_text();
    INFO("rendered: ", text);
    const GammaTermExpr reparsed = parse_expr(text);
    CHECK(reparsed == tree);
    CHECK(reparsed.render_text() == text);
  }
}

TEST_CASE("rendering edge cases stay parseable") {
  CHECK(GammaTermExpr{}.render_text() == "1");
  CHECK(GammaTermExpr{{pi_factor(0)}}.render_text() == "pi^0");
  CHECK(parse_expr("pi^0") == GammaTermExpr{{pi_factor(0)}});
  CHECK(GammaTermExpr{{pi_factor(-2)}}.render_text() == "pi^-2");
  CHECK(parse_expr("pi^-2") == GammaTermExpr{{pi_factor(-2)}});
  CHECK(GammaTermExpr{{pi_factor(1), num_factor(-7, 2, -3)}}.render_text() ==
        "pi / -7/2^3");
  CHECK(parse_expr("pi / -7/2^3").factors[1] == num_factor(-7, 2, -3));
}

TEST_CASE("simplify folds expressions into canonical closed forms") {
  CHECK(parse_expr("Gamma(1/3)^2 * Gamma(2/3) / pi").simplify() ==
        parse_monomial_product("2 3^-1/2 G1/3"));
  CHECK(parse_expr("pi").simplify() == Monomial::pi_power(Rational(1)));
  CHECK(parse_expr("2^-3").simplify() == Monomial::from_rational(Q(1, 8)));
  CHECK(parse_expr("Gamma(7)").simplify() == Monomial::from_rational(Q(720)));
  CHECK(parse_expr("6/4").simplify() == Monomial::from_rational(Q(3, 2)));
  CHECK(parse_expr("Gamma(1/2)^2").simplify() == Monomial::pi_power(Rational(1)));

  SUBCASE("zero exponents drop before any domain checks") {
    CHECK(parse_expr("Gamma(1/7)^0").simplify() == Monomial::one());
    CHECK(parse_expr("Gamma(0)^0 * 2").simplify() ==
          Monomial::from_rational(Q(2)));
  }
  SUBCASE("an irrational literal power keeps a certified tail") {
    const Monomial root7 = parse_expr("7^1/2").simplify();
    CHECK(root7.has_tail());
    const BigBall sq = eval_monomial(root7, {30, 10}).pow_long(2);
    const BigBall gap =
        sq.sub(BigBall::from_long(7, sq.precision()));
    CHECK(std::abs(gap.mid_double()) + gap.rad_double() < 1e-25);
  }
  SUBCASE("domain errors propagate") {
    CHECK_THROWS_AS(parse_expr("Gamma(1/7)").simplify(), UnsupportedDenominator);
    CHECK_THROWS_AS(parse_expr("Gamma(0)").simplify(), PoleError);
    CHECK_THROWS_AS(parse_expr("Gamma(-1/2)").simplify(), NegativeValue);
    CHECK_THROWS_AS(parse_expr("0 * pi").simplify(), NonPositiveCoefficient);
    CHECK_THROWS_AS(parse_expr("-2").simplify(), NonPositiveCoefficient);
  }
}

TEST_CASE("eval produces enclosures consistent with direct ball arithmetic") {
  const PrecisionConfig cfg{50, 10};
  const long bits = cfg.working_bits();

  SUBCASE("gamma quotient matches its composed value") {
    const BigBall got = parse_expr("Gamma(1/4)^2 / pi^1/2").eval(cfg);
    const BigBall want = gamma_numeric_bits(Q(1, 4), bits)
                             .pow_long(2)
                             .div(BigBall::pi(bits).sqrt());
    const BigBall ratio = got.div(want);
    CHECK(std::abs(ratio.mid_double() - 1.0) + ratio.rad_double() < 1e-45);
  }
  SUBCASE("negative gamma arguments evaluate") {
    const BigBall got = parse_expr("Gamma(-1/2)").eval(cfg);
    CHECK(got.is_negative());
    const BigBall want = BigBall::pi(bits).sqrt().mul_rational(Q(-2));
    const BigBall ratio = got.div(want);
    CHECK(std::abs(ratio.mid_double() - 1.0) + ratio.rad_double() < 1e-45);
  }
  SUBCASE("unsupported-denominator arguments still evaluate numerically") {
    // Reflection at 1/7: Gamma(1/7) Gamma(6/7) = pi / sin(pi/7).
    const BigBall got = parse_expr("Gamma(1/7) * Gamma(6/7)").eval(cfg);
    const BigBall want =
        BigBall::pi(bits).div(BigBall::pi(bits).mul_rational(Q(1, 7)).sin());
    const BigBall ratio = got.div(want);
    CHECK(std::abs(ratio.mid_double() - 1.0) + ratio.rad_double() < 1e-45);
  }
  SUBCASE("exact rational subproducts stay exact") {
    const BigBall one = parse_expr("2^-3 * 2^3").eval(cfg);
    CHECK(one.is_exact());
    CHECK(one.mid_double() == 1.0);
  }
  SUBCASE("eval agrees with simplify-then-evaluate") {
    for (const char* text :
         {"Gamma(1/3)^2 * Gamma(2/3) / pi", "Gamma(11/24) * Gamma(13/24)",
          "pi^3/2 / Gamma(3/4)^2", "Gamma(7/60) / Gamma(7/60)"}) {
      const BigBall direct = parse_expr(text).eval(cfg);
      const BigBall folded =
          eval_monomial(parse_expr(text).simplify(), cfg);
      const BigBall ratio = direct.div(folded);
      INFO("expr: ", text);
      CHECK(std::abs(ratio.mid_double() - 1.0) + ratio.rad_double() < 1e-45);
    }
  }
  SUBCASE("domain errors propagate") {
    CHECK_THROWS_AS(parse_expr("Gamma(0)").eval(cfg), PoleError);
    CHECK_THROWS_AS(parse_expr("Gamma(-3)").eval(cfg), PoleError);
    CHECK_THROWS_AS(parse_expr("-2^1/2").eval(cfg), DomainError);
  }
}
