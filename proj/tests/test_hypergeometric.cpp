#include "gammacalc/hypergeometric.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "gammacalc/errors.hpp"
#include "gammacalc/monomial.hpp"
#include "gammacalc/numeric.hpp"
#include "gammacalc/relations.hpp"

namespace gammacalc {
namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

HypergeometricSpec spec_of(const Rational& a, const Rational& b,
                           const Rational& c) {
  return HypergeometricSpec{a, b, c};
}

// |closed/series - 1| with the series ball's radius included.
double closed_vs_series(const HypergeometricSpec& spec) {
  const BigBall closed =
      eval_monomial(gauss_value(spec), PrecisionConfig{30, 10});
  const BigBall dev = closed.div(gauss_numeric(spec));
  return std::abs(dev.mid_double() - 1.0) + dev.rad_double();
}

TEST_CASE("gauss closed forms reproduce the printed surd expressions") {
  struct Example {
    HypergeometricSpec spec;
    const char* surd;
  };
  const std::vector<Example> examples = {
      {spec_of(Q(1, 4), Q(-1, 12), Q(2, 3)), "sqrt3+1^1/2 2^-1/4 3^-3/8"},
      {spec_of(Q(5, 24), Q(-1, 24), Q(2, 3)),
       "sqrt3+sqrt2^1/2 2^-1/12 3^-1/2"},
      {spec_of(Q(11, 60), Q(-1, 60), Q(2, 3)),
       "phi*^1/2 sqrt3+1^1/2 sqrt5+sqrt3^1/2 2^-1 3^-1/2 5^-7/24"},
      {spec_of(Q(3, 10), Q(-1, 30), Q(3, 5)),
       "sqrt15+psi^1/2 2^-19/30 3^-1/20 5^-1/3"},
  };
  for (const Example& ex : examples) {
    const Monomial value = gauss_value(ex.spec);
    CHECK(value == parse_monomial_product(ex.surd));
    CHECK(is_gamma_free(value));
    CHECK_FALSE(value.has_tail());
  }
}

TEST_CASE("gauss closed form is symmetric in the upper parameters") {
  const std::vector<HypergeometricSpec> specs = {
      spec_of(Q(1, 4), Q(-1, 12), Q(2, 3)),
      spec_of(Q(5, 24), Q(-1, 24), Q(2, 3)),
      spec_of(Q(11, 60), Q(-1, 60), Q(2, 3)),
      spec_of(Q(3, 10), Q(-1, 30), Q(3, 5)),
      spec_of(Q(1, 3), Q(1, 4), Q(3, 2)),
  };
  for (const HypergeometricSpec& s : specs) {
    const Monomial swapped = gauss_value(spec_of(s.b, s.a, s.c));
    CHECK(gauss_value(s) == swapped);
  }
}

TEST_CASE("vanishing upper parameter gives the unit value") {
  CHECK(gauss_value(spec_of(Q(1, 3), Q(0), Q(4, 5))).is_unit());
  CHECK(gauss_value(spec_of(Q(0), Q(0), Q(5, 8))).is_unit());
  // The quotient collapses before any reduction, so arguments whose gamma
  // values have no closed form are still fine here.
  CHECK(gauss_value(spec_of(Q(1, 7), Q(0), Q(2, 7))).is_unit());
}

TEST_CASE("gauss closed form rejects ill-posed parameter sets") {
  CHECK_THROWS_AS(gauss_value(spec_of(Q(1, 2), Q(1, 2), Q(1))),
                  DivergentAtOne);
  CHECK_THROWS_AS(gauss_value(spec_of(Q(2, 3), Q(2, 3), Q(1, 3))),
                  DivergentAtOne);
  CHECK_THROWS_AS(gauss_value(spec_of(Q(-1, 4), Q(-1, 12), Q(0))), PoleError);
  CHECK_THROWS_AS(gauss_value(spec_of(Q(-5, 2), Q(0), Q(-2))), PoleError);
  // c - a = -1: a pole in a surviving quotient argument.
  CHECK_THROWS_AS(gauss_value(spec_of(Q(4, 3), Q(-3, 2), Q(1, 3))),
                  PoleError);
  // c - a = 5/14: no closed form at denominator 14.
  CHECK_THROWS_AS(gauss_value(spec_of(Q(1, 7), Q(-1, 7), Q(1, 2))),
                  UnsupportedDenominator);
}

TEST_CASE("series oracle agrees with the printed closed forms") {
  const std::vector<HypergeometricSpec> specs = {
      spec_of(Q(1, 4), Q(-1, 12), Q(2, 3)),
      spec_of(Q(5, 24), Q(-1, 24), Q(2, 3)),
      spec_of(Q(11, 60), Q(-1, 60), Q(2, 3)),
      spec_of(Q(3, 10), Q(-1, 30), Q(3, 5)),
  };
  for (const HypergeometricSpec& s : specs)
    CHECK(closed_vs_series(s) < 1e-12);
}

TEST_CASE("series oracle on elementary instances") {
  // b = 0: the series is identically 1.
  const BigBall unit = gauss_numeric(spec_of(Q(1, 3), Q(0), Q(4, 5)));
  CHECK(std::abs(unit.mid_double() - 1.0) <= unit.rad_double());
  CHECK(unit.rad_double() < 1e-20);

  // Terminating sum with a hand-checked exact value:
  // 2F1(1/2,-3;5/2;1) = 1 - 3/5 + 9/35 - 1/21 = 64/105.
  const BigBall fin = gauss_numeric(spec_of(Q(1, 2), Q(-3), Q(5, 2)));
  const BigBall diff =
      fin.sub(BigBall::from_rational(Q(64, 105), fin.precision()));
  CHECK(std::abs(diff.mid_double()) + diff.rad_double() < 1e-25);

  // 2F1(1/2,1/2;2;1) = Gamma(2)Gamma(1)/Gamma(3/2)^2 = 4/pi.
  const BigBall v = gauss_numeric(spec_of(Q(1, 2), Q(1, 2), Q(2)));
  const BigBall dev =
      v.div(BigBall::pi(v.precision()).inv().mul_rational(Q(4)));
  CHECK(std::abs(dev.mid_double() - 1.0) + dev.rad_double() < 1e-12);
}

TEST_CASE("series oracle refuses divergent and hopeless parameter sets") {
  CHECK_THROWS_AS(gauss_numeric(spec_of(Q(1, 2), Q(1, 2), Q(1))),
                  DivergentAtOne);
  CHECK_THROWS_AS(gauss_numeric(spec_of(Q(1), Q(1), Q(1, 2))),
                  DivergentAtOne);
  CHECK_THROWS_AS(gauss_numeric(spec_of(Q(-5, 2), Q(0), Q(-2))), PoleError);
  // c - a - b = 1/30 < 1/20.
  CHECK_THROWS_AS(gauss_numeric(spec_of(Q(1, 2), Q(7, 15), Q(1))),
                  SlowConvergence);
}

TEST_CASE("closed form vs series on randomly drawn admissible specs") {
  // Denominators all divide 120, so every derived gamma argument reduces.
  const std::vector<long> dens = {1,  2,  3,  4,  5,  6,  8,  10,
                                  12, 15, 20, 24, 30, 40, 60, 120};
  std::mt19937 rng(20260819u);
  std::uniform_int_distribution<size_t> pick_den(0, dens.size() - 1);
  int accepted = 0;
  int attempts = 0;
  while (accepted < 20 && ++attempts < 20000) {
    const long da = dens[pick_den(rng)];
    const long db = dens[pick_den(rng)];
    const long dc = dens[pick_den(rng)];
    std::uniform_int_distribution<long> na(-2 * da, 2 * da);
    std::uniform_int_distribution<long> nb(-2 * db, 2 * db);
    std::uniform_int_distribution<long> nc(1, 3 * dc);
    const Rational a = Q(na(rng), da);
    const Rational b = Q(nb(rng), db);
    const Rational c = Q(nc(rng), dc);
    if (sgn(a) == 0 || sgn(b) == 0) continue;
    const Rational s = c - a - b;
    if (cmp(s, Q(1, 4)) < 0) continue;
    if (sgn(c - a) <= 0 || sgn(c - b) <= 0) continue;
    ++accepted;
    INFO("spec a=", to_string(a), " b=", to_string(b), " c=", to_string(c));
    CHECK(closed_vs_series(spec_of(a, b, c)) < 1e-12);
  }
  CHECK(accepted == 20);
}

TEST_CASE("beta values and their symmetry") {
  CHECK(beta_value(Q(1, 2), Q(1, 2)) == Monomial::pi_power(Q(1)));
  CHECK(beta_value(Q(1, 3), Q(1, 5)) == beta_value(Q(1, 5), Q(1, 3)));
  CHECK(beta_value(Q(1, 5), Q(1, 2)) == beta_value(Q(1, 2), Q(1, 5)));
  CHECK(beta_value(Q(7, 120), Q(1, 8)) == beta_value(Q(1, 8), Q(7, 120)));

  CHECK_THROWS_AS(beta_value(Q(-1), Q(1, 2)), PoleError);
  CHECK_THROWS_AS(beta_value(Q(1, 2), Q(0)), PoleError);
  CHECK_THROWS_AS(beta_value(Q(1, 7), Q(1, 7)), UnsupportedDenominator);
}

TEST_CASE("beta pair matches the hyperelliptic integrals") {
  const PrecisionConfig cfg{40, 10};
  const long bits = cfg.working_bits();
  const BigBall h1 = hyperelliptic_H(1, cfg);
  const BigBall h2 = hyperelliptic_H(2, cfg);
  const BigBall b1 = eval_monomial(beta_value(Q(1, 5), Q(1, 2)), cfg);
  const BigBall b2 = eval_monomial(beta_value(Q(2, 5), Q(1, 2)), cfg);
  const BigBall dev1 = b1.div(h1.mul_rational(Q(5)));
  const BigBall dev2 = b2.div(h2.mul_rational(Q(5)));
  CHECK(std::abs(dev1.mid_double() - 1.0) + dev1.rad_double() < 1e-30);
  CHECK(std::abs(dev2.mid_double() - 1.0) + dev2.rad_double() < 1e-30);
  (void)bits;
}

TEST_CASE("gamma values at fifths rebuild exactly from the beta pair") {
  // With H1 = B(1/5,1/2)/5 and H2 = B(2/5,1/2)/5 substituted as Monomials,
  // the two reconstruction formulas collapse to exact identities:
  //   Gamma(1/5) = pi^{1/5} 2^{19/50} 5^{1/2} phi^{1/10} H1^{2/5} H2^{1/5}
  //   Gamma(2/5) = pi^{2/5} 2^{4/25} phi^{1/5} H1^{-1/5} H2^{2/5}
  const Monomial h1 = beta_value(Q(1, 5), Q(1, 2)).mul_rational(Q(1, 5));
  const Monomial h2 = beta_value(Q(2, 5), Q(1, 2)).mul_rational(Q(1, 5));

  const Monomial rhs1 =
      Monomial::pi_power(Q(1, 5))
          .mul(parse_monomial_product("2^19/50 5^1/2 phi^1/10"))
          .mul(h1.pow(Q(2, 5)))
          .mul(h2.pow(Q(1, 5)));
  CHECK(rhs1 == Monomial::gamma_power(Q(1, 5)));

  const Monomial rhs2 = Monomial::pi_power(Q(2, 5))
                            .mul(parse_monomial_product("2^4/25 phi^1/5"))
                            .mul(h1.pow(Q(-1, 5)))
                            .mul(h2.pow(Q(2, 5)));
  CHECK(rhs2 == Monomial::gamma_power(Q(2, 5)));
}

}  // namespace
}  // namespace gammacalc
