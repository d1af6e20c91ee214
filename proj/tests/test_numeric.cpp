#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "gammacalc/errors.hpp"
#include "gammacalc/numeric.hpp"

using namespace gammacalc;

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

// Reference values computed with an unrelated arbitrary-precision library.
const char* kGamma13 =
    "2.678938534707747633655692940974677644128689377957301100950428327590418";
const char* kGammaM12 =
    "-3.544907701811032054596334966682290365595098912244774256427615579705823";
const char* kGammaM32 =
    "2.363271801207354703064223311121526910396732608163182837618410386470548";
const char* kAgm12 =
    "1.456791031046906869186432383265081974973863943221305590794172383267926";
const char* kK1Sqrt2 =
    "1.854074677301371918433850347195260046217598823521766905585928045056022";
const char* kH1 =
    "1.2537306248172072669154827140327980740178305457639370449833649651557";
const char* kH2 =
    "0.7358187960811761643454468250207306814801756340459187022047763606066";

void check_against(const BigBall& ball, const char* reference, double tol) {
  // The reference strings carry ~69 significant digits; give them a radius
  // of one unit in their last place so containment is meaningful even when
  // the ball under test is tighter than the string.
  const BigBall ref = BigBall::from_strings(reference, "1e-66", ball.precision());
  const BigBall diff = ball.sub(ref);
  CHECK(diff.contains_zero());
  CHECK(diff.abs().mid_double() < tol);
}

}  // namespace

TEST_CASE("gamma oracle hits frozen references") {
  const PrecisionConfig cfg{50, 10};
  check_against(gamma_numeric(Q(1, 3), cfg), kGamma13, 1e-48);
  check_against(gamma_numeric(Q(-1, 2), cfg), kGammaM12, 1e-48);
  check_against(gamma_numeric(Q(-3, 2), cfg), kGammaM32, 1e-48);

  const long bits = cfg.working_bits();
  const BigBall g12 = gamma_numeric(Q(1, 2), cfg);
  const BigBall d12 = g12.sub(BigBall::pi(bits).sqrt());
  CHECK(d12.contains_zero());
  CHECK(d12.abs().mid_double() < 1e-48);

  const BigBall g1 = gamma_numeric(Q(1), cfg);
  CHECK(g1.sub(BigBall::from_long(1, bits)).contains_zero());
  const BigBall g5 = gamma_numeric(Q(5), cfg);
  CHECK(g5.sub(BigBall::from_long(24, bits)).contains_zero());

  // contractual radius: <= 10^{-decimal_digits} * |Gamma(x)|
  CHECK(gamma_numeric(Q(1, 3), cfg).rad_double() < 1e-50 * 2.68);
  CHECK(gamma_numeric(Q(1, 24), cfg).rad_double() < 1e-50 * 23.5);
}

TEST_CASE("gamma oracle rejects poles") {
  CHECK_THROWS_AS(gamma_numeric(Q(0)), PoleError);
  CHECK_THROWS_AS(gamma_numeric(Q(-1)), PoleError);
  CHECK_THROWS_AS(gamma_numeric(Q(-7)), PoleError);
  CHECK_THROWS_AS(gamma_numeric(Q(-12, 4)), PoleError);
}

TEST_CASE("gamma functional equations hold numerically") {
  const PrecisionConfig cfg{50, 10};
  const long bits = cfg.working_bits();
  const BigBall one = BigBall::from_long(1, bits);
  std::mt19937 rng(5051);
  std::uniform_int_distribution<long> den(2, 97);
  for (int iter = 0; iter < 100; ++iter) {
    const long q = den(rng);
    const long p = std::uniform_int_distribution<long>(1, q - 1)(rng);
    const Rational x = Q(p, q);

    // recurrence: Gamma(x+1) = x Gamma(x)
    const BigBall lhs = gamma_numeric(x + Rational(1), cfg);
    const BigBall rhs = gamma_numeric(x, cfg).mul_rational(x);
    const BigBall r1 = lhs.div(rhs).sub(one).abs();
    CHECK(r1.contains_zero());
    CHECK(r1.mid_double() < 1e-45);

    // reflection: Gamma(x) Gamma(1-x) sin(pi x) = pi
    const BigBall refl = gamma_numeric(x, cfg)
                             .mul(gamma_numeric(Rational(1) - x, cfg))
                             .mul(BigBall::pi(bits).mul_rational(x).sin())
                             .div(BigBall::pi(bits));
    const BigBall r2 = refl.sub(one).abs();
    CHECK(r2.contains_zero());
    CHECK(r2.mid_double() < 1e-45);
  }
}

TEST_CASE("gamma balls nest across precisions") {
  std::mt19937 rng(3031);
  std::uniform_int_distribution<long> den(2, 50);
  for (int iter = 0; iter < 40; ++iter) {
    const long q = den(rng);
    const long p = std::uniform_int_distribution<long>(1, 3 * q - 1)(rng);
    const Rational x = Q(p, q);
    if (is_integer(x) && x <= 0) continue;
    const BigBall g30 = gamma_numeric(x, PrecisionConfig{30, 10});
    const BigBall g60 = gamma_numeric(x, PrecisionConfig{60, 10});
    // the 60-digit midpoint must lie inside the 30-digit ball
    const BigBall mid60 = BigBall::from_strings(g60.mid_roundtrip_string(), "0",
                                                g60.precision());
    CHECK(g30.sub(mid60).contains_zero());
    CHECK(g60.rad_double() < g30.rad_double() + 1e-300);
  }
}

TEST_CASE("eval_monomial covers all factor kinds") {
  const PrecisionConfig cfg{50, 10};
  const long bits = cfg.working_bits();
  const BigBall u = eval_monomial(Monomial::one(), cfg);
  CHECK(u.sub(BigBall::from_long(1, bits)).contains_zero());
  CHECK(u.rad_double() < 1e-45);

  const BigBall half_pi_pow = eval_monomial(Monomial::pi_power(Q(1, 2)), cfg);
  CHECK(half_pi_pow.sub(BigBall::pi(bits).sqrt()).contains_zero());

  const Monomial m = Monomial::from_rational(Q(7, 11))
                         .mul(Monomial::pi_power(Q(-2)))
                         .mul(Monomial::from_atom(Atom::kPhi, Q(1, 2)))
                         .mul(Monomial::gamma_power(Q(1, 3), Q(-1)));
  const BigBall direct = BigBall::from_rational(Q(7, 11), bits)
                             .mul(BigBall::pi(bits).pow_long(-2))
                             .mul(atom_value(Atom::kPhi, bits).sqrt())
                             .div(gamma_numeric_bits(Q(1, 3), bits));
  const BigBall diff = eval_monomial(m, cfg).sub(direct);
  CHECK(diff.contains_zero());
  CHECK(diff.abs().mid_double() < 1e-45);
}

TEST_CASE("agm basics and quadratic convergence") {
  const long bits = PrecisionConfig{50, 10}.working_bits();
  const BigBall one = BigBall::from_long(1, bits);
  const BigBall two = BigBall::from_long(2, bits);

  int iters = 0;
  const BigBall trivial = agm(one, one, &iters);
  CHECK(trivial.sub(one).contains_zero());
  CHECK(iters == 0);

  check_against(agm(one, two), kAgm12, 1e-52);
  const BigBall sym = agm(two, one).sub(agm(one, two));
  CHECK(sym.contains_zero());

  CHECK_THROWS_AS(agm(one.neg(), one), DomainError);
  CHECK_THROWS_AS(agm(BigBall::from_long(0, bits), one), DomainError);

  // iteration bound log2(digits) + 4 across the stated modulus range
  const int bound = static_cast<int>(std::log2(50.0) + 4.0);
  for (const Rational& k : {Q(1, 10), Q(1, 2), Q(9, 10), Q(99, 100)}) {
    const BigBall kc =
        one.sub(BigBall::from_rational(k, bits).pow_long(2)).sqrt();
    int n = 0;
    agm(one, kc, &n);
    CHECK(n <= bound);
  }
}

TEST_CASE("elliptic_K special values and domain") {
  const long bits = PrecisionConfig{50, 10}.working_bits();
  const BigBall k0 = BigBall::from_long(0, bits);
  const BigBall d0 = elliptic_K(k0).sub(BigBall::pi(bits).mul_rational(Q(1, 2)));
  CHECK(d0.contains_zero());
  CHECK(d0.abs().mid_double() < 1e-52);

  check_against(elliptic_K(BigBall::from_long(2, bits).sqrt().inv()), kK1Sqrt2,
                1e-52);

  CHECK_THROWS_AS(elliptic_K(BigBall::from_long(1, bits)), DomainError);
  CHECK_THROWS_AS(elliptic_K(BigBall::from_rational(Q(3, 2), bits)), DomainError);
}

TEST_CASE("six K-function gamma formulas pass at 50 digits") {
  const EllipticReport rep = verify_elliptic_formulas(PrecisionConfig{50, 10});
  INFO(rep.summary());
  CHECK(rep.formulas.size() == 6);
  CHECK(rep.all_pass);
  CHECK(rep.max_relative_deviation < 1e-45);
  for (const FormulaCheck& f : rep.formulas) CHECK(f.pass);
}

TEST_CASE("hyperelliptic integrals match the beta values") {
  const PrecisionConfig cfg{40, 10};
  const long bits = cfg.working_bits();
  const BigBall one = BigBall::from_long(1, bits);

  std::vector<double> errs;
  const BigBall h1 = hyperelliptic_H(1, cfg, &errs);
  const BigBall h2 = hyperelliptic_H(2, cfg);
  CHECK(h1.rad_double() < 1e-30);
  CHECK(h2.rad_double() < 1e-30);
  check_against(h1, kH1, 1e-30);
  check_against(h2, kH2, 1e-30);
  CHECK_THROWS_AS(hyperelliptic_H(3, cfg), DomainError);

  // refinement estimates drop by >= 10x per level once converging
  size_t start = 0;
  while (start < errs.size() && errs[start] > 1e-2) ++start;
  for (size_t i = start; i + 1 < errs.size(); ++i) {
    if (errs[i + 1] == 0.0) break;
    CHECK(errs[i + 1] <= errs[i] / 10.0);
  }

  // 5 H_1 = B(1/5, 1/2), 5 H_2 = B(2/5, 1/2)
  const BigBall b15 = gamma_numeric_bits(Q(1, 5), bits)
                          .mul(gamma_numeric_bits(Q(1, 2), bits))
                          .div(gamma_numeric_bits(Q(7, 10), bits));
  const BigBall b25 = gamma_numeric_bits(Q(2, 5), bits)
                          .mul(gamma_numeric_bits(Q(1, 2), bits))
                          .div(gamma_numeric_bits(Q(9, 10), bits));
  const BigBall r1 = h1.mul_rational(Q(5)).div(b15).sub(one).abs();
  const BigBall r2 = h2.mul_rational(Q(5)).div(b25).sub(one).abs();
  CHECK(r1.contains_zero());
  CHECK(r1.mid_double() < 1e-28);
  CHECK(r2.contains_zero());
  CHECK(r2.mid_double() < 1e-28);

  // Gamma(1/5) and Gamma(2/5) reconstructed from H_1, H_2
  const BigBall s5 = BigBall::from_long(5, bits).sqrt();
  const BigBall phi = BigBall::from_long(5, bits).add(s5);
  const BigBall pi = BigBall::pi(bits);
  const BigBall g15 = pi.pow_rational(Q(1, 5))
                          .mul(BigBall::from_long(2, bits).pow_rational(Q(19, 50)))
                          .mul(s5)
                          .mul(phi.pow_rational(Q(1, 10)))
                          .mul(h1.pow_rational(Q(2, 5)))
                          .mul(h2.pow_rational(Q(1, 5)));
  const BigBall g25 = pi.pow_rational(Q(2, 5))
                          .mul(BigBall::from_long(2, bits).pow_rational(Q(4, 25)))
                          .mul(phi.pow_rational(Q(1, 5)))
                          .mul(h1.pow_rational(Q(-1, 5)))
                          .mul(h2.pow_rational(Q(2, 5)));
  const BigBall d15 = g15.div(gamma_numeric_bits(Q(1, 5), bits)).sub(one).abs();
  const BigBall d25 = g25.div(gamma_numeric_bits(Q(2, 5), bits)).sub(one).abs();
  CHECK(d15.contains_zero());
  CHECK(d15.mid_double() < 1e-28);
  CHECK(d25.contains_zero());
  CHECK(d25.mid_double() < 1e-28);
}
