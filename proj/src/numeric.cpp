#include "gammacalc/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <utility>
#include <vector>

#include "gammacalc/errors.hpp"

namespace gammacalc {

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

// Bernoulli numbers B_0, B_1, ... via the defining recurrence
// sum_{j<=m} C(m+1, j) B_j = [m == 0]. Cached; guarded for parallel sweeps.
Rational bernoulli(int n) {
  static std::mutex mu;
  static std::vector<Rational> cache = {Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());
    Rational acc(0);
    mpz_class binom(1);  // C(m+1, j), starting at j = 0
    for (int j = 0; j < m; ++j) {
      acc += Rational(binom) * cache[j];
      binom *= m + 1 - j;
      binom /= j + 1;
    }
    Rational b = -acc / Rational(m + 1);
    b.canonicalize();
    cache.push_back(b);
  }
  return cache[n];
}

long ceil_to_long(const Rational& q) {
  Rational f = floor_rational(q);
  if (f != q) f += 1;
  return to_long(f.get_num());
}

}  // namespace

BigBall gamma_numeric_bits(const Rational& x, long prec_bits) {
  Rational xc = x;
  xc.canonicalize();
  if (is_integer(xc) && xc <= 0) {
    throw PoleError("gamma pole at " + to_string(xc));
  }
  const long wb = prec_bits + 64;
  // Shift so the Stirling series reaches its floor well below the target.
  const double digits = static_cast<double>(prec_bits) * 0.30102999566398;
  long threshold = std::lround(0.45 * digits) + 8;
  threshold = std::max(threshold, 12L);

  long shift = 0;
  if (xc < threshold) shift = ceil_to_long(Rational(threshold) - xc);
  Rational prod(1);
  for (long j = 0; j < shift; ++j) prod *= xc + Rational(j);
  const Rational z = xc + Rational(shift);

  // log Gamma(z) = (z - 1/2) log z - z + log(2 pi)/2
  //               + sum_k B_{2k} / (2k (2k-1) z^{2k-1})  + remainder,
  // |remainder| <= first omitted term for real z > 0.
  const BigBall zb = BigBall::from_rational(z, wb);
  const BigBall lnz = zb.log();
  BigBall acc = zb.sub(BigBall::from_rational(Q(1, 2), wb)).mul(lnz);
  acc = acc.sub(zb);
  acc = acc.add(BigBall::pi(wb).mul_rational(Q(2)).log().mul_rational(Q(1, 2)));

  const BigBall zinv = zb.inv();
  const BigBall zinv2 = zinv.mul(zinv);
  BigBall zpow = zinv;  // z^{-(2k-1)}
  const long target_exp = -(prec_bits + 30);
  const int cap = static_cast<int>(4 * threshold + 64);
  for (int k = 1;; ++k) {
    const Rational c = bernoulli(2 * k) / Q(2L * k * (2L * k - 1));
    acc = acc.add(zpow.mul_rational(c));
    zpow = zpow.mul(zinv2);
    const Rational c2 = bernoulli(2 * k + 2) / Q((2L * k + 2) * (2L * k + 1));
    const BigBall omitted = zpow.mul_rational(c2).abs();
    if (omitted.magnitude_exponent_upper() <= target_exp) {
      acc = acc.with_radius_increased(omitted);
      break;
    }
    if (k > cap) {
      throw ConvergenceError("Stirling series failed to reach tolerance");
    }
  }

  BigBall g = acc.exp();
  if (shift > 0) {
    Rational invprod = Rational(1) / prod;
    invprod.canonicalize();
    g = g.mul_rational(invprod);
  }
  return g;
}

BigBall gamma_numeric(const Rational& x, const PrecisionConfig& cfg) {
  return gamma_numeric_bits(x, cfg.working_bits());
}

BigBall eval_monomial(const Monomial& m, const PrecisionConfig& cfg) {
  return m.eval(cfg.working_bits(), [](const Rational& arg, long bits) {
    return gamma_numeric_bits(arg, bits);
  });
}

BigBall agm(const BigBall& a, const BigBall& b, int* iterations) {
  if (!a.is_positive() || !b.is_positive()) {
    throw DomainError("agm requires strictly positive operands");
  }
  const long bits = std::max(a.precision(), b.precision());
  BigBall x = a;
  BigBall y = b;
  int iters = 0;
  const int cap = 2 * static_cast<int>(std::log2(static_cast<double>(bits))) + 16;
  while (iters < cap) {
    // The gap ball's width floor is a few accumulated ulps, so leave slack
    // above 2^{-bits} or the test would never trigger.
    const BigBall gap = x.sub(y).abs();
    if (gap.magnitude_exponent_upper() <=
        x.magnitude_exponent_upper() - bits + 8) {
      break;
    }
    const BigBall am = x.add(y).mul_rational(Q(1, 2));
    const BigBall gm = x.mul(y).sqrt();
    x = am;
    y = gm;
    ++iters;
  }
  if (iterations != nullptr) *iterations = iters;
  // The true mean lies between the final iterates; the hull encloses both.
  return x.hull(y);
}

BigBall elliptic_K(const BigBall& k) {
  const long bits = k.precision();
  const BigBall one = BigBall::from_long(1, bits);
  const BigBall kc2 = one.sub(k.mul(k));
  if (!kc2.is_positive()) {
    throw DomainError("elliptic_K requires modulus with k^2 < 1");
  }
  const BigBall m = agm(one, kc2.sqrt());
  return BigBall::pi(bits).div(m.mul_rational(Q(2)));
}

std::string EllipticReport::summary() const {
  std::ostringstream os;
  os << formulas.size() << " formulas, max relative deviation "
     << max_relative_deviation << " (tolerance " << tolerance << ")";
  for (const FormulaCheck& f : formulas) {
    if (!f.pass) os << "\n  FAIL " << f.name << ": " << f.relative_deviation;
  }
  return os.str();
}

EllipticReport verify_elliptic_formulas(const PrecisionConfig& cfg) {
  PrecisionConfig inner = cfg;
  inner.guard_digits += 10;
  const long bits = inner.working_bits();

  auto L = [&](long v) { return BigBall::from_long(v, bits); };
  const BigBall one = L(1);
  const BigBall s2 = L(2).sqrt();
  const BigBall s3 = L(3).sqrt();
  const BigBall s5 = L(5).sqrt();
  const BigBall pi = BigBall::pi(bits);

  // Moduli of the singular K values used by the product formulas.
  const BigBall k3 = s3.sub(one).div(s2.mul_rational(Q(2)));
  const BigBall k1 = s2.inv();
  const BigBall k2 = s2.sub(one);
  const BigBall k15 =
      L(2).sub(s3).mul(L(3).sub(s5)).mul(s5.sub(s3)).div(s2.mul_rational(Q(8)));
  const BigBall k5 =
      BigBall::from_rational(Q(1, 2), bits).sub(s5.sub(L(2)).sqrt()).sqrt();
  const BigBall k6 = L(2).sub(s3).mul(s3.sub(s2));

  const BigBall K3 = elliptic_K(k3);
  const BigBall K1 = elliptic_K(k1);
  const BigBall K2 = elliptic_K(k2);
  const BigBall K15 = elliptic_K(k15);
  const BigBall K5 = elliptic_K(k5);
  const BigBall K6 = elliptic_K(k6);

  const BigBall g15 = gamma_numeric_bits(Q(1, 5), bits);
  const BigBall g25 = gamma_numeric_bits(Q(2, 5), bits);
  const BigBall phi = L(5).add(s5);        // 5 + sqrt5
  const BigBall phis = L(5).sub(s5);       // 5 - sqrt5
  const BigBall psi = L(5).add(s5.mul_rational(Q(2))).sqrt();   // sqrt(5+2 sqrt5)
  const BigBall psis = L(5).sub(s5.mul_rational(Q(2))).sqrt();  // sqrt(5-2 sqrt5)

  EllipticReport rep;
  rep.tolerance = std::pow(10.0, -(cfg.decimal_digits - 5));
  auto check = [&](const std::string& name, const Rational& arg,
                   const BigBall& rhs) {
    const BigBall lhs = gamma_numeric_bits(arg, bits);
    const BigBall dev = rhs.div(lhs).sub(one).abs();
    FormulaCheck fc;
    fc.name = name;
    fc.relative_deviation = dev.mid_double() + dev.rad_double();
    fc.pass = fc.relative_deviation < rep.tolerance;
    rep.max_relative_deviation =
        std::max(rep.max_relative_deviation, fc.relative_deviation);
    rep.all_pass = rep.all_pass && fc.pass;
    rep.formulas.push_back(std::move(fc));
  };

  check("Gamma(1/3) = pi^{1/3} 2^{7/9} 3^{-1/12} K((sqrt3-1)/(2 sqrt2))^{1/3}",
        Q(1, 3),
        pi.pow_rational(Q(1, 3))
            .mul(L(2).pow_rational(Q(7, 9)))
            .div(L(3).pow_rational(Q(1, 12)))
            .mul(K3.pow_rational(Q(1, 3))));
  check("Gamma(1/4) = 2 pi^{1/4} K(1/sqrt2)^{1/2}", Q(1, 4),
        pi.pow_rational(Q(1, 4)).mul_rational(Q(2)).mul(
            K1.pow_rational(Q(1, 2))));
  check("Gamma(1/8) = pi^{1/8} 2^{17/8} K(1/sqrt2)^{1/4} K(sqrt2-1)^{1/2}",
        Q(1, 8),
        pi.pow_rational(Q(1, 8))
            .mul(L(2).pow_rational(Q(17, 8)))
            .mul(K1.pow_rational(Q(1, 4)))
            .mul(K2.pow_rational(Q(1, 2))));
  check(
      "Gamma(1/15) = pi^{1/6} 3^{29/60} 5^{1/24} sqrt(phi*) sqrt(psi+sqrt3) "
      "2^{-1/9} Gamma(1/5)^{1/2} Gamma(2/5)^{-1/2} K((sqrt3-1)/(2 sqrt2))^{1/6} "
      "K((2-sqrt3)(3-sqrt5)(sqrt5-sqrt3)/(8 sqrt2))^{1/2}",
      Q(1, 15),
      pi.pow_rational(Q(1, 6))
          .mul(L(3).pow_rational(Q(29, 60)))
          .mul(L(5).pow_rational(Q(1, 24)))
          .mul(phis.sqrt())
          .mul(psi.add(s3).sqrt())
          .div(L(2).pow_rational(Q(1, 9)))
          .mul(g15.pow_rational(Q(1, 2)))
          .mul(g25.pow_rational(Q(-1, 2)))
          .mul(K3.pow_rational(Q(1, 6)))
          .mul(K15.pow_rational(Q(1, 2))));
  check(
      "Gamma(1/20) = 2^{9/40} 5^{1/8} phi^{5/8} sqrt(psi*+1) pi^{-1/4} "
      "Gamma(1/5)^{1/2} Gamma(2/5)^{1/2} K(sqrt(1/2-sqrt(sqrt5-2)))^{1/2}",
      Q(1, 20),
      L(2).pow_rational(Q(9, 40))
          .mul(L(5).pow_rational(Q(1, 8)))
          .mul(phi.pow_rational(Q(5, 8)))
          .mul(psis.add(one).sqrt())
          .div(pi.pow_rational(Q(1, 4)))
          .mul(g15.pow_rational(Q(1, 2)))
          .mul(g25.pow_rational(Q(1, 2)))
          .mul(K5.pow_rational(Q(1, 2))));
  check(
      "Gamma(1/24) = pi^{1/24} 2^{89/36} 3^{25/48} sqrt(sqrt2+1) "
      "(sqrt3-1)^{1/4} K(1/sqrt2)^{1/4} K((sqrt3-1)/(2 sqrt2))^{1/6} "
      "K((2-sqrt3)(sqrt3-sqrt2))^{1/2}",
      Q(1, 24),
      pi.pow_rational(Q(1, 24))
          .mul(L(2).pow_rational(Q(89, 36)))
          .mul(L(3).pow_rational(Q(25, 48)))
          .mul(s2.add(one).sqrt())
          .mul(s3.sub(one).pow_rational(Q(1, 4)))
          .mul(K1.pow_rational(Q(1, 4)))
          .mul(K3.pow_rational(Q(1, 6)))
          .mul(K6.pow_rational(Q(1, 2))));
  return rep;
}

BigBall hyperelliptic_H(int j, const PrecisionConfig& cfg,
                        std::vector<double>* level_errors) {
  if (j != 1 && j != 2) throw DomainError("integral index must be 1 or 2");
  const long bits = cfg.working_bits() + 32;
  const long target_exp =
      -std::lround((cfg.decimal_digits - 10) * 3.3219281) - 4;

  const BigBall one = BigBall::from_long(1, bits);
  const BigBall pi = BigBall::pi(bits);
  const BigBall pi_half = pi.mul_rational(Q(1, 2));

  // Transformation: z = (1 + tanh((pi/2) sinh t)) / 2 maps R onto (0,1).
  // With s = (pi/2) sinh t and a = 1/(1+e^{2s}), b = e^{2s}/(1+e^{2s}):
  // the node at +t has z = b, 1-z = a; the node at -t has z = a, 1-z = b,
  // and both share dz/dt = pi cosh(t) a b. 1-z^5 = (1-z)(1+z+z^2+z^3+z^4)
  // keeps the singular factor exact near z = 1. Near that end the summand
  // behaves like cosh(t) e^{-s} (the integrand grows like a^{-1/2}), so the
  // cutoff needs sinh(tmax) >= 2 (bits+pad) ln2 / pi.
  const double tmax_d = std::asinh(2.0 * (static_cast<double>(bits) + 40) *
                                   0.6931471805599453 / 3.141592653589793);

  auto integrand_sum = [&](const BigBall& z, const BigBall& u) {
    // f_j at the node: 1/sqrt((1-z)(1+z+z^2+z^3+z^4)), times z for j = 2.
    BigBall poly = one;
    BigBall zp = z;
    for (int d = 1; d <= 4; ++d) {
      poly = poly.add(zp);
      if (d < 4) zp = zp.mul(z);
    }
    BigBall f = u.mul(poly).sqrt().inv();
    if (j == 2) f = f.mul(z);
    return f;
  };

  // Contribution g(t) + g(-t) for t > 0, or g(0) alone.
  auto node = [&](const BigBall& t, bool pair) {
    const BigBall et = t.exp();
    const BigBall cosh_t = et.add(et.inv()).mul_rational(Q(1, 2));
    const BigBall sinh_t = et.sub(et.inv()).mul_rational(Q(1, 2));
    const BigBall e2s = pi_half.mul(sinh_t).mul_rational(Q(2)).exp();
    const BigBall a = e2s.add(one).inv();
    const BigBall b = e2s.mul(a);
    const BigBall w = pi.mul(cosh_t).mul(a).mul(b);  // dz/dt at both nodes
    BigBall f = integrand_sum(b, a);
    if (pair) f = f.add(integrand_sum(a, b));
    return w.mul(f);
  };

  // Level 2 sum (h = 1/4), then refine by halving h: the whole-line
  // trapezoid weights are uniform, so the new sum is half the old one plus
  // h * (odd-multiple nodes).
  const int kFirstLevel = 2;
  const int kLevelCap = 12;
  Rational h = Q(1, 4);
  long n_nodes = static_cast<long>(std::ceil(tmax_d * 4));
  BigBall sum = node(BigBall::from_long(0, bits), false);
  for (long k = 1; k <= n_nodes; ++k) {
    sum = sum.add(node(BigBall::from_rational(h * Rational(k), bits), true));
  }
  BigBall result = sum.mul_rational(h);

  for (int level = kFirstLevel + 1; level <= kLevelCap; ++level) {
    h /= 2;
    n_nodes *= 2;
    BigBall odd = BigBall::from_long(0, bits);
    for (long k = 1; k <= n_nodes; k += 2) {
      odd = odd.add(node(BigBall::from_rational(h * Rational(k), bits), true));
    }
    const BigBall refined = result.mul_rational(Q(1, 2)).add(odd.mul_rational(h));
    const BigBall delta = refined.sub(result).abs();
    if (level_errors != nullptr) {
      level_errors->push_back(delta.mid_double() + delta.rad_double());
    }
    result = refined;
    if (delta.magnitude_exponent_upper() <= target_exp) {
      return result.with_radius_increased(delta);
    }
  }
  throw ConvergenceError("tanh-sinh level cap reached before tolerance");
}

}  // namespace gammacalc
