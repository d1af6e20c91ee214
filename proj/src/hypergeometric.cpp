#include "gammacalc/hypergeometric.hpp"

#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "gammacalc/errors.hpp"
#include "gammacalc/numeric.hpp"
#include "gammacalc/relations.hpp"

namespace gammacalc {

namespace {

constexpr long kMaxSeriesTerms = 50'000'000;

bool is_nonpositive_integer(const Rational& q) {
  return is_integer(q) && sgn(q) <= 0;
}

// Leading coefficients of Gamma(z+alpha)/Gamma(z+beta) ~ z^{alpha-beta}
// (1 + g1/z + g2/z^2 + ...); both are exact rationals in alpha, beta.
Rational ratio_coeff_1(const Rational& alpha, const Rational& beta) {
  return (alpha - beta) * (alpha + beta - 1) / 2;
}

Rational ratio_coeff_2(const Rational& alpha, const Rational& beta) {
  const Rational d = alpha - beta;
  const Rational binom = d * (d - 1) / 2;
  return binom * (3 * (alpha + beta - 1) * (alpha + beta - 1) - (d + 1)) / 12;
}

// Hurwitz zeta sum_{j>=0} (base+j)^{-sigma} for rational sigma > 1 and a
// moderately large integer base, by Euler-Maclaurin with four Bernoulli
// correction terms; the first omitted term bounds the remainder and is
// folded into the radius.
BigBall hurwitz_zeta(const Rational& sigma, long base, long bits) {
  const BigBall k = BigBall::from_long(base, bits);
  const Rational one(1);
  // integral term k^{1-sigma}/(sigma-1) plus the f(k)/2 boundary term
  BigBall acc = k.pow_rational(one - sigma).div(
      BigBall::from_rational(sigma - one, bits));
  acc = acc.add(k.pow_rational(-sigma).mul_rational(Rational(1, 2)));
  // B_{2i}/(2i)! for i = 1..5; the i=5 entry only bounds the remainder.
  static const std::pair<long, long> kBernoulliOverFact[] = {
      {1, 12}, {-1, 720}, {1, 30240}, {-1, 1209600}, {1, 47900160}};
  Rational poch = sigma;  // (sigma)_{2i-1}, extended two factors per step
  for (int i = 1; i <= 5; ++i) {
    const Rational coeff = Rational(kBernoulliOverFact[i - 1].first,
                                    kBernoulliOverFact[i - 1].second) *
                           poch;
    const BigBall term =
        k.pow_rational(-sigma - (2 * i - 1)).mul_rational(coeff);
    if (i == 5) {
      acc = acc.with_radius_increased(term);
      break;
    }
    acc = acc.add(term);
    poch *= (sigma + (2 * i - 1)) * (sigma + 2 * i);
  }
  return acc;
}

// Terminating series: a or b is a nonpositive integer, so the term
// recurrence hits an exact zero factor and the sum is finite.
BigBall sum_terminating(const HypergeometricSpec& spec, long bits) {
  BigBall sum = BigBall::from_long(1, bits);
  BigBall t = BigBall::from_long(1, bits);
  for (long k = 0;; ++k) {
    const Rational fa = spec.a + k;
    const Rational fb = spec.b + k;
    if (sgn(fa) == 0 || sgn(fb) == 0) break;
    const Rational ratio = fa * fb / ((spec.c + k) * (k + 1));
    t = t.mul_rational(ratio);
    sum = sum.add(t);
  }
  return sum;
}

// Asymptotic remainder sum_{j>=from} t_j ~ D (zeta(1+s,from) +
// e1 zeta(2+s,from) + e2 zeta(3+s,from)), plus a calibrated bound on the
// third-order residue.
BigBall series_tail(const BigBall& d_factor, const Rational& s,
                    const Rational& e1, const Rational& e2,
                    const BigBall& residue_bound, long from, long bits) {
  BigBall tail = hurwitz_zeta(s + 1, from, bits);
  tail = tail.add(hurwitz_zeta(s + 2, from, bits).mul_rational(e1));
  tail = tail.add(hurwitz_zeta(s + 3, from, bits).mul_rational(e2));
  tail = d_factor.mul(tail);
  const BigBall residual_tail =
      residue_bound.mul(d_factor.abs()).mul(hurwitz_zeta(s + 4, from, bits));
  return tail.with_radius_increased(residual_tail);
}

// |t_j / (D j^{-1-s}) - (1 + e1/j + e2/j^2)| * j^3: an empirical value of
// the third-order coefficient of the term asymptotic at index j.
BigBall residue_at(const BigBall& t, const BigBall& d_factor,
                   const Rational& s, const Rational& e1, const Rational& e2,
                   long j, long bits) {
  const Rational jq = make_rational(j);
  const BigBall scaled =
      t.mul(BigBall::from_long(j, bits).pow_rational(s + 1)).div(d_factor);
  const Rational poly = 1 + e1 / jq + e2 / (jq * jq);
  return scaled.sub(BigBall::from_rational(poly, bits))
      .abs()
      .mul_rational(jq * jq * jq);
}

}  // namespace

Monomial gauss_value(const HypergeometricSpec& spec) {
  const Rational s = spec.c - spec.a - spec.b;
  if (sgn(s) <= 0)
    throw DivergentAtOne("2F1 at unit argument requires c-a-b > 0; got " +
                         to_string(s));
  if (is_nonpositive_integer(spec.c))
    throw PoleError("lower parameter c = " + to_string(spec.c) +
                    " is a nonpositive integer");
  std::map<Rational, Rational, RationalLess> exponents;
  exponents[spec.c] += 1;
  exponents[s] += 1;
  exponents[spec.c - spec.a] -= 1;
  exponents[spec.c - spec.b] -= 1;
  std::vector<std::pair<Rational, Rational>> factors;
  for (const auto& [arg, exp] : exponents)
    if (sgn(exp) != 0) factors.emplace_back(arg, exp);
  return simplify_gamma_term(factors);
}

BigBall gauss_numeric(const HypergeometricSpec& spec,
                      const PrecisionConfig& cfg) {
  const Rational s = spec.c - spec.a - spec.b;
  if (sgn(s) <= 0)
    throw DivergentAtOne("2F1 at unit argument requires c-a-b > 0; got " +
                         to_string(s));
  if (is_nonpositive_integer(spec.c))
    throw PoleError("lower parameter c = " + to_string(spec.c) +
                    " is a nonpositive integer");
  const long bits = cfg.working_bits() + 32;

  if (is_nonpositive_integer(spec.a) || is_nonpositive_integer(spec.b)) {
    Rational len(0);
    bool first = true;
    for (const Rational* p : {&spec.a, &spec.b}) {
      if (!is_nonpositive_integer(*p)) continue;
      const Rational candidate = -*p;
      if (first || candidate < len) len = candidate;
      first = false;
    }
    if (len > kMaxSeriesTerms)
      throw SlowConvergence("terminating series has too many terms");
    return sum_terminating(spec, bits);
  }

  if (cmp(s, Rational(1, 20)) < 0)
    throw SlowConvergence("c-a-b = " + to_string(s) +
                          " is below 1/20; the k^(-1-(c-a-b)) term decay "
                          "puts the target out of reach");

  // Index from which the term asymptotic is trusted: past all parameter
  // shifts, and far enough that the third-order residue is below target.
  const double s_d = mpq_get_d(s.get_mpq_t());
  const double digits = static_cast<double>(cfg.decimal_digits);
  double start = 64.0;
  for (const Rational* p : {&spec.a, &spec.b, &spec.c}) {
    const double v = mpq_get_d(p->get_mpq_t());
    start = std::max(start, 2.0 * std::abs(v) + 16.0);
  }
  start = std::max(start, std::pow(10.0, digits / (3.0 + s_d)));
  if (!(start < static_cast<double>(kMaxSeriesTerms)))
    throw SlowConvergence("series needs more than the term budget at " +
                          std::to_string(cfg.decimal_digits) + " digits");
  const long terms = 2 * (static_cast<long>(start) / 2 + 1);

  // Partial sums in ball arithmetic; the term recurrence multiplier is an
  // exact rational at every step. After the loop, sum holds
  // t_0 + ... + t_{terms-1} and t holds t_terms; the half-length state
  // (partial sum through t_{terms/2 - 1}, term t_{terms/2}) feeds a second,
  // independent tail whose hull guards against a miscalibrated remainder.
  BigBall sum = BigBall::from_long(1, bits);
  BigBall t = BigBall::from_long(1, bits);
  BigBall half_sum(bits), half_term(bits);
  for (long k = 1; k <= terms; ++k) {
    if (k == terms / 2) half_sum = sum;
    const Rational ratio =
        (spec.a + (k - 1)) * (spec.b + (k - 1)) / ((spec.c + (k - 1)) * k);
    t = t.mul_rational(ratio);
    if (k == terms / 2) half_term = t;
    if (k < terms) sum = sum.add(t);
  }

  const BigBall d_factor = gamma_numeric_bits(spec.c, bits)
                               .div(gamma_numeric_bits(spec.a, bits))
                               .div(gamma_numeric_bits(spec.b, bits));
  const Rational p1 = ratio_coeff_1(spec.a, spec.c);
  const Rational p2 = ratio_coeff_2(spec.a, spec.c);
  const Rational q1 = ratio_coeff_1(spec.b, Rational(1));
  const Rational q2 = ratio_coeff_2(spec.b, Rational(1));
  const Rational e1 = p1 + q1;
  const Rational e2 = p2 + q2 + p1 * q1;

  const BigBall res_full = residue_at(t, d_factor, s, e1, e2, terms, bits);
  const BigBall res_half =
      residue_at(half_term, d_factor, s, e1, e2, terms / 2, bits);
  const BigBall residue_bound = res_full.hull(res_half).mul_rational(4);

  const BigBall full =
      sum.add(series_tail(d_factor, s, e1, e2, residue_bound, terms, bits));
  const BigBall half = half_sum.add(
      series_tail(d_factor, s, e1, e2, residue_bound, terms / 2, bits));
  return full.hull(half);
}

Monomial beta_value(const Rational& a, const Rational& b) {
  std::map<Rational, Rational, RationalLess> exponents;
  exponents[a] += 1;
  exponents[b] += 1;
  exponents[a + b] -= 1;
  std::vector<std::pair<Rational, Rational>> factors;
  for (const auto& [arg, exp] : exponents)
    if (sgn(exp) != 0) factors.emplace_back(arg, exp);
  return simplify_gamma_term(factors);
}

const std::vector<GaussSelfCheck>& gauss_selfchecks() {
  static const std::vector<GaussSelfCheck> checks = {
      {{make_rational(1, 4), make_rational(-1, 12), make_rational(2, 3)},
       "sqrt3+1^1/2 2^-1/4 3^-3/8"},
      {{make_rational(5, 24), make_rational(-1, 24), make_rational(2, 3)},
       "sqrt3+sqrt2^1/2 2^-1/12 3^-1/2"},
      {{make_rational(11, 60), make_rational(-1, 60), make_rational(2, 3)},
       "phi*^1/2 sqrt3+1^1/2 sqrt5+sqrt3^1/2 2^-1 3^-1/2 5^-7/24"},
      {{make_rational(3, 10), make_rational(-1, 30), make_rational(3, 5)},
       "sqrt15+psi^1/2 2^-19/30 3^-1/20 5^-1/3"}};
  return checks;
}

}  // namespace gammacalc
