#include "gammacalc/trig.hpp"

#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gammacalc/errors.hpp"

namespace gammacalc {

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

Rational mod2(const Rational& q_raw) {
  Rational q = q_raw;
  q.canonicalize();
  Rational r = q - floor_rational(q / 2) * 2;
  r.canonicalize();
  return r;
}

long bits_for_digits(int digits) {
  PrecisionConfig cfg;
  cfg.decimal_digits = digits;
  return cfg.working_bits();
}

// Shared surds of the degree-16 tower: roots sqrt5, sqrt2, sqrt3, psi plus
// the derived psi*, phi, phi*, sqrt(phi), sqrt(phi*). The last two come from
// psi = phi^{3/2} / (2^{3/2} sqrt5) and its conjugate, so
// sqrt(phi) = 2 sqrt10 psi / phi and sqrt(phi*) = 2 sqrt2 sqrt5 psi* / phi*.
struct Pack60 {
  TowerPtr t;
  TowerElement one, two, s2, s3, s5, s6, s10, s15;
  TowerElement psi, psis, phi, phis, sqrtphi, sqrtphis;
};

const Pack60& pack60() {
  static const Pack60* pack = [] {
    TowerPtr t = tower60();
    TowerElement one = TowerElement::constant(t, Q(1));
    TowerElement two = TowerElement::constant(t, Q(2));
    TowerElement s5 = TowerElement::root(t, 0);
    TowerElement s2 = TowerElement::root(t, 1);
    TowerElement s3 = TowerElement::root(t, 2);
    TowerElement psi = TowerElement::root(t, 3);
    TowerElement psis = s5.div(psi);
    TowerElement phi = TowerElement::constant(t, Q(5)).add(s5);
    TowerElement phis = TowerElement::constant(t, Q(5)).sub(s5);
    TowerElement s10 = s2.mul(s5);
    TowerElement sqrtphi = s10.mul(psi).mul_rational(Q(2)).div(phi);
    TowerElement sqrtphis = s10.mul(psis).mul_rational(Q(2)).div(phis);
    return new Pack60{t,   one, two, s2,  s3,   s5,   s2.mul(s3), s10,
                      s3.mul(s5), psi, psis, phi, phis, sqrtphi, sqrtphis};
  }();
  return *pack;
}

// Surds of the degree-32 tower: roots sqrt2, sqrt3, sqrt(sqrt2+1),
// sqrt(sqrt3+1), 2^{1/4}. sqrt(sqrt3+sqrt2) is not an extra root: from
// (sqrt3+1)(sqrt3+sqrt2) = ((2+sqrt2+sqrt6)/2)^2 it already lies in the
// field, as (2+sqrt2+sqrt6)/(2 sqrt(sqrt3+1)). The minus partners follow
// from the conjugate products (sqrt2+1)(sqrt2-1) = 1, (sqrt3+1)(sqrt3-1) = 2,
// (sqrt3+sqrt2)(sqrt3-sqrt2) = 1.
struct Pack24 {
  TowerPtr t;
  TowerElement one, s2, s3, u2, u3, u23, q2, u2m, u3m, u23m;
};

const Pack24& pack24() {
  static const Pack24* pack = [] {
    TowerPtr t = tower24();
    TowerElement one = TowerElement::constant(t, Q(1));
    TowerElement s2 = TowerElement::root(t, 0);
    TowerElement s3 = TowerElement::root(t, 1);
    TowerElement u2 = TowerElement::root(t, 2);
    TowerElement u3 = TowerElement::root(t, 3);
    TowerElement q2 = TowerElement::root(t, 4);
    TowerElement u23 = TowerElement::constant(t, Q(2))
                           .add(s2)
                           .add(s2.mul(s3))
                           .div(u3)
                           .mul_rational(Q(1, 2));
    return new Pack24{t,  one, s2, s3, u2, u3, u23, q2,
                      u2.inv(), s2.div(u3), u23.inv()};
  }();
  return *pack;
}

struct ExpEntry {
  long k, n;
  UnitCirclePoint z;
};

// The closed forms for exp(i pi k/n) with n | 60, re-expressed over the
// tower surds (1/(4 sqrt5) = sqrt5/20 and so on).
std::vector<ExpEntry> exp_table_60() {
  const Pack60& p = pack60();
  std::vector<ExpEntry> out;
  auto add = [&](long k, long n, TowerElement re, TowerElement im) {
    out.push_back({k, n, UnitCirclePoint{Q(k, n), std::move(re), std::move(im)}});
  };
  add(1, 3, TowerElement::constant(p.t, Q(1, 2)), p.s3.mul_rational(Q(1, 2)));
  add(1, 4, p.s2.mul_rational(Q(1, 2)), p.s2.mul_rational(Q(1, 2)));
  {
    TowerElement c = p.phi.mul(p.s5).mul_rational(Q(1, 20));
    add(1, 5, c.mul(p.one), c.mul(p.psis));
  }
  {
    TowerElement c = p.phis.mul(p.s5).mul_rational(Q(1, 20));
    add(2, 5, c.mul(p.one), c.mul(p.psi));
  }
  {
    TowerElement c = p.s2.mul_rational(Q(1, 4));
    add(1, 12, c.mul(p.s3.add(p.one)), c.mul(p.s3.sub(p.one)));
  }
  {
    TowerElement c = p.phis.mul(p.s5).mul_rational(Q(1, 40));
    add(1, 15, c.mul(p.s3.mul(p.psi).add(p.one)), c.mul(p.psi.sub(p.s3)));
    add(4, 15, c.mul(p.s3.mul(p.psi).sub(p.one)), c.mul(p.psi.add(p.s3)));
  }
  {
    TowerElement c = p.phi.mul(p.s5).mul_rational(Q(1, 40));
    add(2, 15, c.mul(p.s3.mul(p.psis).add(p.one)), c.mul(p.s3.sub(p.psis)));
    add(7, 15, c.mul(p.s3.mul(p.psis).sub(p.one)), c.mul(p.s3.add(p.psis)));
  }
  {
    TowerElement c = p.sqrtphis.mul(p.s5).mul_rational(Q(1, 20));
    add(1, 20, c.mul(p.psi.add(p.s5)), c.mul(p.psi.sub(p.s5)));
  }
  {
    TowerElement c = p.sqrtphi.mul(p.s5).mul_rational(Q(1, 20));
    add(3, 20, c.mul(p.s5.add(p.psis)), c.mul(p.s5.sub(p.psis)));
  }
  {
    TowerElement c = p.phis.mul(p.s10).mul_rational(Q(1, 80));
    add(1, 60, c.mul(p.s3.add(p.one)).mul(p.psi.sub(p.s3).add(p.two)),
        c.mul(p.s3.sub(p.one)).mul(p.s3.sub(p.psi).add(p.two)));
    add(19, 60, c.mul(p.s3.sub(p.one)).mul(p.psi.add(p.s3).add(p.two)),
        c.mul(p.s3.add(p.one)).mul(p.s3.add(p.psi).sub(p.two)));
  }
  {
    TowerElement c = p.phi.mul(p.s10).mul_rational(Q(1, 80));
    add(7, 60, c.mul(p.s3.sub(p.one)).mul(p.psis.add(p.s3).add(p.two)),
        c.mul(p.s3.add(p.one)).mul(p.s3.add(p.psis).sub(p.two)));
    add(13, 60, c.mul(p.s3.add(p.one)).mul(p.psis.sub(p.s3).add(p.two)),
        c.mul(p.s3.sub(p.one)).mul(p.s3.sub(p.psis).add(p.two)));
  }
  return out;
}

// exp(i pi k/n) for n in {8, 24}; sqrt(2 sqrt2 +- sqrt3 +- 1) factors into
// sqrt(sqrt2 +- 1) sqrt(sqrt3 +- 1) sqrt(sqrt3 +- sqrt2) (see the surd
// identity checks below), which puts these points into the degree-64 tower.
// The entries with n | 12 repeat the degree-16 forms inside this tower for
// the pairwise product checks.
std::vector<ExpEntry> exp_table_24() {
  const Pack24& p = pack24();
  std::vector<ExpEntry> out;
  auto add = [&](long k, long n, TowerElement re, TowerElement im) {
    out.push_back({k, n, UnitCirclePoint{Q(k, n), std::move(re), std::move(im)}});
  };
  {
    TowerElement c = p.q2.mul_rational(Q(1, 2));  // 1/2^{3/4} = 2^{1/4}/2
    add(1, 8, p.u2.mul(c), p.u2m.mul(c));
  }
  {
    TowerElement c = p.s2.mul(p.q2).mul_rational(Q(1, 4));  // 1/2^{5/4}
    add(1, 24, p.u2.mul(p.u3m).mul(p.u23).mul(c),
        p.u2m.mul(p.u3m).mul(p.u23m).mul(c));
    add(7, 24, p.u2.mul(p.u3).mul(p.u23m).mul(c),
        p.u2m.mul(p.u3).mul(p.u23).mul(c));
  }
  add(1, 4, p.s2.mul_rational(Q(1, 2)), p.s2.mul_rational(Q(1, 2)));
  {
    TowerElement c = p.s2.mul_rational(Q(1, 4));
    add(1, 12, c.mul(p.s3.add(p.one)), c.mul(p.s3.sub(p.one)));
  }
  add(1, 3, TowerElement::constant(p.t, Q(1, 2)), p.s3.mul_rational(Q(1, 2)));
  return out;
}

const UnitCirclePoint& find_entry(const std::vector<ExpEntry>& table, long k, long n) {
  for (const auto& e : table)
    if (e.k == k && e.n == n) return e.z;
  throw Error("exponential table has no entry " + std::to_string(k) + "/" +
              std::to_string(n));
}

const UnitCirclePoint& seed60() {
  static const UnitCirclePoint* seed =
      new UnitCirclePoint(find_entry(exp_table_60(), 1, 60));
  return *seed;
}

const UnitCirclePoint& seed24() {
  static const UnitCirclePoint* seed =
      new UnitCirclePoint(find_entry(exp_table_24(), 1, 24));
  return *seed;
}

// sin(pi x) for 0 < x <= 1/2, denominator dividing 24 or 60, as a product
// of generator powers. Entries were fitted against 250-digit sines and are
// re-certified by verify_lemma_tables' towers and the test suite.
constexpr const char* kSineTable = R"(1/2 :=
1/3 := 2^-1 3^1/2
1/4 := 2^-1/2
1/5 := 2^-1/2 5^1/2 phi^-1/2
2/5 := 2^-3/2 phi^1/2
1/6 := 2^-1
1/8 := 2^-3/4 sqrt2+1^-1/2
3/8 := 2^-3/4 sqrt2+1^1/2
1/10 := 5^1/2 phi^-1
3/10 := 2^-2 5^-1/2 phi
1/12 := 2^-1/2 sqrt3+1^-1
5/12 := 2^-3/2 sqrt3+1
1/15 := 2^1/2 5^1/2 phi^-1/2 sqrt15+psi^-1/2 sqrt15+psi*^-1/2
2/15 := 2^-1 sqrt15+psi^-1/2 sqrt15+psi*^1/2
4/15 := 2^-3/2 phi^-1/2 sqrt15+psi^1/2 sqrt15+psi*^1/2
7/15 := 2^-2 5^-1/2 phi sqrt15+psi^1/2 sqrt15+psi*^-1/2
1/20 := 5^1/2 phi^-1/2 sqrt10+sqrtphi^-1/2 sqrt10+sqrtphi*^-1/2
3/20 := 2^-1 sqrt10+sqrtphi^-1/2 sqrt10+sqrtphi*^1/2
7/20 := 2^-2 5^-1/2 phi sqrt10+sqrtphi^1/2 sqrt10+sqrtphi*^-1/2
9/20 := 2^-1 phi^-1/2 sqrt10+sqrtphi^1/2 sqrt10+sqrtphi*^1/2
1/24 := 2^-3/4 sqrt2+1^-1/2 sqrt3+1^-1/2 sqrt3+sqrt2^-1/2
5/24 := 2^-5/4 sqrt2+1^1/2 sqrt3+1^1/2 sqrt3+sqrt2^-1/2
7/24 := 2^-5/4 sqrt2+1^-1/2 sqrt3+1^1/2 sqrt3+sqrt2^1/2
11/24 := 2^-3/4 sqrt2+1^1/2 sqrt3+1^-1/2 sqrt3+sqrt2^1/2
1/30 := 2^3/2 5 phi^-3/2 sqrt15+psi^-1
7/30 := 2^-3/2 5^-1/2 phi^3/2 sqrt15+psi*^-1
11/30 := 2^-3/2 phi^-1/2 sqrt15+psi
13/30 := 2^-5/2 5^-1/2 phi^1/2 sqrt15+psi*
1/60 := 2^5/4 5^3/4 sqrt3+1^-1/2 sqrt5+sqrt3^-1/2 phi^-1 sqrt15+psi^-1/2 sqrt10+sqrtphi^-1/2
7/60 := 2^-5/4 5^-1/4 sqrt3+1^1/2 sqrt5+sqrt3^-1/2 phi sqrt15+psi*^-1/2 sqrt10+sqrtphi*^-1/2
11/60 := 2^-5/4 5^-1/4 sqrt3+1^-1/2 sqrt5+sqrt3^-1/2 sqrt15+psi^1/2 sqrt10+sqrtphi^1/2
13/60 := 2^-7/4 5^-1/4 sqrt3+1^-1/2 sqrt5+sqrt3^1/2 phi^1/2 sqrt15+psi*^1/2 sqrt10+sqrtphi*^-1/2
17/60 := 2^-7/4 5^-1/4 sqrt3+1^1/2 sqrt5+sqrt3^-1/2 sqrt15+psi*^1/2 sqrt10+sqrtphi*^1/2
19/60 := 2^-5/4 5^1/4 sqrt3+1^1/2 sqrt5+sqrt3^1/2 phi^-1/2 sqrt15+psi^1/2 sqrt10+sqrtphi^-1/2
23/60 := 2^-5/4 5^-1/4 sqrt3+1^-1/2 sqrt5+sqrt3^1/2 phi^1/2 sqrt15+psi*^-1/2 sqrt10+sqrtphi*^1/2
29/60 := 2^-3/4 5^1/4 sqrt3+1^1/2 sqrt5+sqrt3^1/2 phi^-1/2 sqrt15+psi^-1/2 sqrt10+sqrtphi^1/2)";

const std::map<Rational, Monomial, RationalLess>& sine_table() {
  static const auto* table = [] {
    auto* out = new std::map<Rational, Monomial, RationalLess>;
    std::istringstream in(kSineTable);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto pos = line.find(":=");
      std::string key = line.substr(0, pos);
      while (!key.empty() && key.back() == ' ') key.pop_back();
      out->emplace(*parse_rational(key), parse_monomial_product(line.substr(pos + 2)));
    }
    return out;
  }();
  return *table;
}

// ---- verification helpers ----------------------------------------------

void verify_pack_consistency(CheckReport& rep) {
  const Pack60& p = pack60();
  rep.require(p.psi.mul(p.psis) == p.s5, "psi psi* == sqrt5");
  rep.require(p.phi.mul(p.phis) == TowerElement::constant(p.t, Q(20)),
              "phi phi* == 20");
  rep.require(p.sqrtphi.mul(p.sqrtphi) == p.phi, "sqrt(phi)^2 == phi");
  rep.require(p.sqrtphis.mul(p.sqrtphis) == p.phis, "sqrt(phi*)^2 == phi*");
  rep.require(p.psi.mul(p.psi) ==
                  TowerElement::constant(p.t, Q(5)).add(p.s5.mul_rational(Q(2))),
              "psi^2 == 5 + 2 sqrt5");
  const long bits = bits_for_digits(50);
  rep.require(p.psis.eval(bits).is_positive(), "psi* positive");
  rep.require(p.sqrtphi.eval(bits).is_positive(), "sqrt(phi) positive");
  rep.require(p.sqrtphis.eval(bits).is_positive(), "sqrt(phi*) positive");

  const Pack24& q = pack24();
  rep.require(q.u2m.mul(q.u2m) == q.s2.sub(q.one), "sqrt(sqrt2-1)^2 == sqrt2-1");
  rep.require(q.u3m.mul(q.u3m) == q.s3.sub(q.one), "sqrt(sqrt3-1)^2 == sqrt3-1");
  rep.require(q.u23m.mul(q.u23m) == q.s3.sub(q.s2),
              "sqrt(sqrt3-sqrt2)^2 == sqrt3-sqrt2");
  rep.require(q.q2.mul(q.q2) == q.s2, "(2^{1/4})^2 == sqrt2");
  rep.require(q.u2m.eval(bits).is_positive() && q.u3m.eval(bits).is_positive() &&
                  q.u23m.eval(bits).is_positive(),
              "inverted roots positive");
}

void verify_exp_entry(CheckReport& rep, const ExpEntry& e) {
  const std::string name =
      "exp(i pi " + std::to_string(e.k) + "/" + std::to_string(e.n) + ")";
  const TowerElement one = TowerElement::constant(e.z.re.tower(), Q(1));
  rep.require(e.z.re.mul(e.z.re).add(e.z.im.mul(e.z.im)) == one,
              name + ": re^2 + im^2 == 1");
  const UnitCirclePoint p = e.z.pow_long(e.n);
  const bool odd = e.k % 2 != 0;
  rep.require(p.im.is_zero() && p.re == (odd ? one.neg() : one) &&
                  p.angle == Q(odd ? 1 : 0),
              name + ": nth power is (-1)^k");
  const long bits = bits_for_digits(100);
  const BigBall ang = BigBall::pi(bits).mul_rational(Q(e.k, e.n));
  const BigBall dc = e.z.re.eval(bits).sub(ang.cos());
  const BigBall ds = e.z.im.eval(bits).sub(ang.sin());
  rep.require(dc.contains_zero() && dc.abs().mid_double() < 1e-95,
              name + ": cosine agrees to 100 digits");
  rep.require(ds.contains_zero() && ds.abs().mid_double() < 1e-95,
              name + ": sine agrees to 100 digits");
}

void check_product(CheckReport& rep, const std::vector<ExpEntry>& table, long k1,
                   long n1, long k2, long n2, long k3, long n3) {
  const UnitCirclePoint z = find_entry(table, k1, n1).mul(find_entry(table, k2, n2));
  const UnitCirclePoint& w = find_entry(table, k3, n3);
  rep.require(z.angle == w.angle && z.re == w.re && z.im == w.im,
              "exp(" + to_string(Q(k1, n1)) + ") exp(" + to_string(Q(k2, n2)) +
                  ") == exp(" + to_string(Q(k3, n3)) + ")");
}

// A product  scale * 2^{quarters2/4} * 5^{quarters5/4} * prod sqrt(roots)
// * prod plain  of positive degree-16 tower values. Squaring it lands back
// in the tower, which turns each surd identity into an exact tower equation
// plus a positivity certificate.
struct SurdProduct {
  std::vector<TowerElement> roots;
  std::vector<TowerElement> plain;
  Rational scale = Q(1);
  long quarters2 = 0;
  long quarters5 = 0;
};

TowerElement surd_square(const SurdProduct& s) {
  const Pack60& p = pack60();
  TowerElement out = TowerElement::constant(p.t, s.scale * s.scale);
  for (const auto& r : s.roots) out = out.mul(r);
  for (const auto& f : s.plain) out = out.mul(f).mul(f);
  auto half_power = [&](long halves, const Rational& base, const TowerElement& root) {
    const long whole = halves >> 1;  // floor
    TowerElement v = TowerElement::constant(p.t, pow_rational(base, whole));
    if (halves - 2 * whole != 0) v = v.mul(root);
    return v;
  };
  out = out.mul(half_power(s.quarters2, Q(2), p.s2));
  out = out.mul(half_power(s.quarters5, Q(5), p.s5));
  return out;
}

BigBall surd_numeric(const SurdProduct& s, long bits) {
  BigBall out = BigBall::from_rational(s.scale, bits);
  if (s.quarters2 != 0)
    out = out.mul(BigBall::from_long(2, bits).pow_rational(Q(s.quarters2, 4)));
  if (s.quarters5 != 0)
    out = out.mul(BigBall::from_long(5, bits).pow_rational(Q(s.quarters5, 4)));
  for (const auto& r : s.roots) out = out.mul(r.eval(bits).sqrt());
  for (const auto& f : s.plain) out = out.mul(f.eval(bits));
  return out;
}

void surd_check(CheckReport& rep, const std::string& name, const SurdProduct& lhs,
                const SurdProduct& rhs) {
  rep.require(surd_square(lhs) == surd_square(rhs), name + ": squares agree");
  const long bits = bits_for_digits(60);
  const BigBall lb = surd_numeric(lhs, bits);
  const BigBall rb = surd_numeric(rhs, bits);
  rep.require(lb.is_positive() && rb.is_positive(), name + ": both sides positive");
  const BigBall diff = lb.sub(rb);
  rep.require(diff.contains_zero() && diff.abs().mid_double() < 1e-40,
              name + ": numeric enclosures agree");
}

void direct_check(CheckReport& rep, const std::string& name, const TowerElement& a,
                  const TowerElement& b) {
  rep.require(a == b, name);
}

void verify_surd_identities(CheckReport& rep) {
  const Pack60& p = pack60();
  auto pm = [](const TowerElement& a, const TowerElement& b, int sgn) {
    return sgn > 0 ? a.add(b) : a.sub(b);
  };

  // conjugate pairs
  surd_check(rep, "sqrt(s15+psi) sqrt(s15-psi) == sqrt2 sqrt(phi*)",
             {{p.s15.add(p.psi), p.s15.sub(p.psi)}, {}, Q(1), 0, 0},
             {{p.phis}, {}, Q(1), 2, 0});
  surd_check(rep, "sqrt(s10+sqrt(phi)) sqrt(s10-sqrt(phi)) == sqrt(phi*)",
             {{p.s10.add(p.sqrtphi), p.s10.sub(p.sqrtphi)}, {}, Q(1), 0, 0},
             {{p.phis}, {}, Q(1), 0, 0});
  surd_check(rep, "sqrt(s15+psi*) sqrt(s15-psi*) == sqrt2 sqrt(phi)",
             {{p.s15.add(p.psis), p.s15.sub(p.psis)}, {}, Q(1), 0, 0},
             {{p.phi}, {}, Q(1), 2, 0});
  surd_check(rep, "sqrt(s10+sqrt(phi*)) sqrt(s10-sqrt(phi*)) == sqrt(phi)",
             {{p.s10.add(p.sqrtphis), p.s10.sub(p.sqrtphis)}, {}, Q(1), 0, 0},
             {{p.phi}, {}, Q(1), 0, 0});

  for (int sgn : {+1, -1}) {
    const std::string tag = sgn > 0 ? " (upper)" : " (lower)";
    surd_check(rep, "sqrt(s15+-psi) sqrt(s15+-psi*)" + tag,
               {{pm(p.s15, p.psi, sgn), pm(p.s15, p.psis, sgn)}, {}, Q(1), 0, 0},
               {{p.phis}, {pm(p.psi, p.s3, sgn)}, Q(1), -2, 0});
    surd_check(rep, "sqrt(s10+-sqrt(phi)) sqrt(s10+-sqrt(phi*))" + tag,
               {{pm(p.s10, p.sqrtphi, sgn), pm(p.s10, p.sqrtphis, sgn)}, {}, Q(1), 0, 0},
               {{}, {pm(p.psi, p.s5, sgn)}, Q(1), 0, 0});
    surd_check(rep, "sqrt(s15+-psi) sqrt(s15-+psi*)" + tag,
               {{pm(p.s15, p.psi, sgn), pm(p.s15, p.psis, -sgn)}, {}, Q(1), 0, 0},
               {{p.phi}, {pm(p.s3, p.psis, sgn)}, Q(1), -2, 0});
    surd_check(rep, "sqrt(s10+-sqrt(phi)) sqrt(s10-+sqrt(phi*))" + tag,
               {{pm(p.s10, p.sqrtphi, sgn), pm(p.s10, p.sqrtphis, -sgn)}, {}, Q(1), 0, 0},
               {{}, {pm(p.s5, p.psis, sgn)}, Q(1), 0, 0});

    direct_check(rep, "psi (s15+-psi*) / sqrt5 == sqrt3 psi +- 1" + tag,
                 p.psi.mul(pm(p.s15, p.psis, sgn)).mul(p.s5).mul_rational(Q(1, 5)),
                 pm(p.s3.mul(p.psi), p.one, sgn));
    direct_check(rep, "psi* (s15+-psi) / sqrt5 == sqrt3 psi* +- 1" + tag,
                 p.psis.mul(pm(p.s15, p.psi, sgn)).mul(p.s5).mul_rational(Q(1, 5)),
                 pm(p.s3.mul(p.psis), p.one, sgn));

    surd_check(rep, "sqrt(s15+-psi) sqrt(s10+-sqrt(phi))" + tag,
               {{pm(p.s15, p.psi, sgn), pm(p.s10, p.sqrtphi, sgn)}, {}, Q(1), 0, 0},
               {{p.s3.sub(p.one), p.s5.add(p.s3)},
                {p.phis, pm(p.s3.add(p.two), p.psi, sgn)},
                Q(1), -7, -1});
    surd_check(rep, "sqrt(s15-+psi) sqrt(s10+-sqrt(phi))" + tag,
               {{pm(p.s15, p.psi, -sgn), pm(p.s10, p.sqrtphi, sgn)}, {}, Q(1), 0, 0},
               {{p.s3.add(p.one), p.s5.sub(p.s3)},
                {p.phis, sgn > 0 ? p.psi.sub(p.s3).add(p.two) : p.psi.add(p.s3).sub(p.two)},
                Q(1), -7, -1});
    surd_check(rep, "sqrt(s15+-psi*) sqrt(s10+-sqrt(phi*))" + tag,
               {{pm(p.s15, p.psis, sgn), pm(p.s10, p.sqrtphis, sgn)}, {}, Q(1), 0, 0},
               {{p.s3.add(p.one), p.s5.add(p.s3)},
                {p.phi, sgn > 0 ? p.psis.sub(p.s3).add(p.two) : p.psis.add(p.s3).sub(p.two)},
                Q(1), -7, -1});
    surd_check(rep, "sqrt(s15-+psi*) sqrt(s10+-sqrt(phi*))" + tag,
               {{pm(p.s15, p.psis, -sgn), pm(p.s10, p.sqrtphis, sgn)}, {}, Q(1), 0, 0},
               {{p.s3.sub(p.one), p.s5.sub(p.s3)},
                {p.phi, pm(p.s3.add(p.two), p.psis, sgn)},
                Q(1), -7, -1});

    direct_check(rep, "2 sqrt3 +- sqrt5 +- 1 factorization" + tag,
                 pm(pm(p.s3.mul_rational(Q(2)), p.s5, sgn), p.one, sgn),
                 p.phis.mul(pm(p.s3, p.one, sgn)).mul(pm(p.s5, p.s3, sgn))
                     .mul(p.s5).mul_rational(Q(1, 10)));
    direct_check(rep, "2 sqrt3 +- sqrt5 -+ 1 factorization" + tag,
                 pm(pm(p.s3.mul_rational(Q(2)), p.s5, sgn), p.one, -sgn),
                 p.phi.mul(pm(p.s3, p.one, -sgn)).mul(pm(p.s5, p.s3, sgn))
                     .mul(p.s5).mul_rational(Q(1, 10)));
  }

  const Pack24& q = pack24();
  auto pm24 = [](const TowerElement& a, const TowerElement& b, int sgn) {
    return sgn > 0 ? a.add(b) : a.sub(b);
  };
  for (int sgn : {+1, -1}) {
    const std::string tag = sgn > 0 ? " (upper)" : " (lower)";
    direct_check(rep, "2 sqrt2 +- sqrt3 + 1 factorization" + tag,
                 pm24(q.s2.mul_rational(Q(2)), q.s3, sgn).add(q.one),
                 q.s2.add(q.one).mul(pm24(q.s3, q.one, -sgn)).mul(pm24(q.s3, q.s2, sgn)));
    direct_check(rep, "2 sqrt2 +- sqrt3 - 1 factorization" + tag,
                 pm24(q.s2.mul_rational(Q(2)), q.s3, sgn).sub(q.one),
                 q.s2.sub(q.one).mul(pm24(q.s3, q.one, sgn)).mul(pm24(q.s3, q.s2, sgn)));
  }
}

}  // namespace

// ---- public surface ------------------------------------------------------

TowerPtr tower60() {
  static const TowerPtr t = Tower::make({
      {Q(5)},
      {Q(2), Q(0)},
      {Q(3), Q(0), Q(0), Q(0)},
      {Q(5), Q(2), Q(0), Q(0), Q(0), Q(0), Q(0), Q(0)},
  });
  return t;
}

TowerPtr tower24() {
  static const TowerPtr t = [] {
    std::vector<Rational> r2p1 = {Q(1), Q(1), Q(0), Q(0)};
    std::vector<Rational> r3p1(8, Q(0));
    r3p1[0] = Q(1);
    r3p1[2] = Q(1);
    std::vector<Rational> r2(16, Q(0));
    r2[1] = Q(1);
    return Tower::make({{Q(2)}, {Q(3), Q(0)}, r2p1, r3p1, r2});
  }();
  return t;
}

TowerElement atom_element_60(Atom a) {
  const Pack60& p = pack60();
  auto c = [&](long v) { return TowerElement::constant(p.t, Q(v)); };
  switch (a) {
    case Atom::kTwo: return c(2);
    case Atom::kThree: return c(3);
    case Atom::kFive: return c(5);
    case Atom::kSqrt2P1: return p.s2.add(p.one);
    case Atom::kSqrt3P1: return p.s3.add(p.one);
    case Atom::kSqrt3PSqrt2: return p.s3.add(p.s2);
    case Atom::kSqrt5PSqrt3: return p.s5.add(p.s3);
    case Atom::kPhi: return p.phi;
    case Atom::kSqrt15PPsi: return p.s15.add(p.psi);
    case Atom::kSqrt15PPsiS: return p.s15.add(p.psis);
    case Atom::kSqrt10PSqrtPhi: return p.s10.add(p.sqrtphi);
    case Atom::kSqrt10PSqrtPhiS: return p.s10.add(p.sqrtphis);
    case Atom::kSqrt6PSqrt5: return p.s6.add(p.s5);
    case Atom::kSqrt10P3: return p.s10.add(c(3));
    case Atom::kSqrtPhiPSqrt5: return p.sqrtphi.add(p.s5);
    case Atom::kSqrtPhiPSqrt3: return p.sqrtphi.add(p.s3);
    case Atom::kSqrt5PSqrtPhiS: return p.s5.add(p.sqrtphis);
    case Atom::kSqrt3PSqrtPhiS: return p.s3.add(p.sqrtphis);
    case Atom::kSqrt2M1: return p.s2.sub(p.one);
    case Atom::kSqrt3M1: return p.s3.sub(p.one);
    case Atom::kSqrt3MSqrt2: return p.s3.sub(p.s2);
    case Atom::kSqrt5MSqrt3: return p.s5.sub(p.s3);
    case Atom::kPhiS: return p.phis;
    case Atom::kPsi: return p.psi;
    case Atom::kPsiS: return p.psis;
    case Atom::kSqrt15MPsi: return p.s15.sub(p.psi);
    case Atom::kSqrt15MPsiS: return p.s15.sub(p.psis);
    case Atom::kSqrt10MSqrtPhi: return p.s10.sub(p.sqrtphi);
    case Atom::kSqrt10MSqrtPhiS: return p.s10.sub(p.sqrtphis);
    case Atom::kSqrt6MSqrt5: return p.s6.sub(p.s5);
    case Atom::kSqrt10M3: return p.s10.sub(c(3));
    case Atom::kSqrtPhiMSqrt5: return p.sqrtphi.sub(p.s5);
    case Atom::kSqrt5MSqrtPhiS: return p.s5.sub(p.sqrtphis);
    case Atom::kSqrtPhiMSqrt3: return p.sqrtphi.sub(p.s3);
    case Atom::kSqrt3MSqrtPhiS: return p.s3.sub(p.sqrtphis);
    default: break;
  }
  throw UnknownAtom("no degree-16 tower element for atom");
}

TowerElement atom_element_24(Atom a) {
  const Pack24& p = pack24();
  switch (a) {
    case Atom::kTwo: return TowerElement::constant(p.t, Q(2));
    case Atom::kThree: return TowerElement::constant(p.t, Q(3));
    case Atom::kFive: return TowerElement::constant(p.t, Q(5));
    case Atom::kSqrt2P1: return p.s2.add(p.one);
    case Atom::kSqrt2M1: return p.s2.sub(p.one);
    case Atom::kSqrt3P1: return p.s3.add(p.one);
    case Atom::kSqrt3M1: return p.s3.sub(p.one);
    case Atom::kSqrt3PSqrt2: return p.s3.add(p.s2);
    case Atom::kSqrt3MSqrt2: return p.s3.sub(p.s2);
    default: break;
  }
  throw UnknownAtom("atom " + std::string(atom_name(a)) +
                    " is not representable in the degree-64 tower");
}

UnitCirclePoint UnitCirclePoint::mul(const UnitCirclePoint& o) const {
  return {mod2(angle + o.angle), re.mul(o.re).sub(im.mul(o.im)),
          re.mul(o.im).add(im.mul(o.re))};
}

UnitCirclePoint UnitCirclePoint::conj() const {
  return {mod2(-angle), re, im.neg()};
}

UnitCirclePoint UnitCirclePoint::pow_long(long e) const {
  if (e < 0) return conj().pow_long(-e);
  const TowerPtr t = re.tower();
  UnitCirclePoint acc{Q(0), TowerElement::constant(t, Q(1)),
                      TowerElement::constant(t, Q(0))};
  UnitCirclePoint base = *this;
  auto k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc = acc.mul(base);
    if (k >>= 1) base = base.mul(base);
  }
  return acc;
}

UnitCirclePoint exp_i_pi(long k, long n) {
  if (n == 0) throw DomainError("exp_i_pi: zero denominator");
  if (n < 0) {
    n = -n;
    k = -k;
  }
  if (k <= 0 || k >= 2 * n)
    throw DomainError("exp_i_pi: angle " + std::to_string(k) + "/" +
                      std::to_string(n) + " must lie in (0, 2)");
  const long g = std::gcd(k, n);
  k /= g;
  n /= g;
  if (60 % n == 0) return seed60().pow_long(k * (60 / n));
  if (24 % n == 0) return seed24().pow_long(k * (24 / n));
  throw UnsupportedDenominator("exp_i_pi: denominator " + std::to_string(n) +
                               " divides neither 60 nor 24");
}

Monomial sin_pi_exact(const Rational& x_raw) {
  Rational x = x_raw;
  x.canonicalize();
  if (!(x > 0 && x < 1))
    throw DomainError("sin_pi_exact: argument " + to_string(x) +
                      " must lie in (0, 1)");
  if (!denominator_divides_24_or_60(x))
    throw UnsupportedDenominator("sin_pi_exact: denominator of " + to_string(x) +
                                 " divides neither 24 nor 60");
  Rational key = x;
  if (key > Q(1, 2)) key = Rational(1) - key;  // sin(pi x) = sin(pi (1-x))
  key.canonicalize();
  const auto& table = sine_table();
  const auto it = table.find(key);
  if (it == table.end()) throw Error("sine table is missing " + to_string(key));
  return it->second;
}

CheckReport verify_lemma_tables() {
  CheckReport rep;
  verify_pack_consistency(rep);

  const std::vector<ExpEntry> t60 = exp_table_60();
  const std::vector<ExpEntry> t24 = exp_table_24();
  for (const auto& e : t60) verify_exp_entry(rep, e);
  for (const auto& e : t24) verify_exp_entry(rep, e);

  // pairwise products tying each entry to earlier ones
  check_product(rep, t60, 1, 12, 1, 4, 1, 3);
  check_product(rep, t60, 1, 15, 1, 3, 2, 5);
  check_product(rep, t60, 1, 15, 1, 15, 2, 15);
  check_product(rep, t60, 2, 15, 2, 15, 4, 15);
  check_product(rep, t60, 2, 15, 1, 3, 7, 15);
  check_product(rep, t60, 1, 20, 1, 5, 1, 4);
  check_product(rep, t60, 3, 20, 1, 4, 2, 5);
  check_product(rep, t60, 1, 60, 1, 4, 4, 15);
  check_product(rep, t60, 1, 60, 1, 5, 13, 60);
  check_product(rep, t60, 7, 60, 1, 5, 19, 60);
  {
    const UnitCirclePoint z = find_entry(t60, 1, 12).mul(find_entry(t60, 1, 5));
    const UnitCirclePoint w = exp_i_pi(17, 60);
    rep.require(z.angle == w.angle && z.re == w.re && z.im == w.im,
                "exp(1/12) exp(1/5) == exp(17/60)");
  }
  check_product(rep, t24, 1, 8, 1, 8, 1, 4);
  check_product(rep, t24, 1, 24, 1, 24, 1, 12);
  check_product(rep, t24, 1, 24, 1, 4, 7, 24);

  // exp_i_pi (seed powers) reproduces every closed form
  for (const auto& e : t60) {
    const UnitCirclePoint z = exp_i_pi(e.k, e.n);
    rep.require(z.angle == e.z.angle && z.re == e.z.re && z.im == e.z.im,
                "seed power matches exp(i pi " + std::to_string(e.k) + "/" +
                    std::to_string(e.n) + ")");
  }
  for (const auto& e : t24) {
    if (24 % e.n != 0 || 60 % e.n == 0) continue;  // only the n in {8, 24} rows
    const UnitCirclePoint z = exp_i_pi(e.k, e.n);
    rep.require(z.angle == e.z.angle && z.re == e.z.re && z.im == e.z.im,
                "seed power matches exp(i pi " + std::to_string(e.k) + "/" +
                    std::to_string(e.n) + ")");
  }

  verify_surd_identities(rep);
  return rep;
}

}  // namespace gammacalc
