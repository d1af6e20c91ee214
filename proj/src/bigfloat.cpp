#include "gammacalc/bigfloat.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "gammacalc/errors.hpp"

namespace gammacalc {

namespace {
constexpr int kRadiusBits = 32;
}  // namespace

long PrecisionConfig::working_bits() const {
  long digits = decimal_digits + guard_digits;
  return static_cast<long>(std::ceil(static_cast<double>(digits) * 3.321928094887363)) + 8;
}

BigBall::BigBall(long prec_bits) : prec_(prec_bits) {
  mpfr_init2(mid_, prec_);
  mpfr_init2(rad_, kRadiusBits);
  mpfr_set_nan(mid_);
  mpfr_set_zero(rad_, 1);
}

BigBall::BigBall(const BigBall& other) : prec_(other.prec_) {
  mpfr_init2(mid_, prec_);
  mpfr_init2(rad_, kRadiusBits);
  mpfr_set(mid_, other.mid_, MPFR_RNDN);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

BigBall::BigBall(BigBall&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(mid_, 2);
  mpfr_init2(rad_, kRadiusBits);
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
}

BigBall& BigBall::operator=(const BigBall& other) {
  if (this != &other) {
    prec_ = other.prec_;
    mpfr_set_prec(mid_, prec_);
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
  }
  return *this;
}

BigBall& BigBall::operator=(BigBall&& other) noexcept {
  if (this != &other) {
    prec_ = other.prec_;
    mpfr_swap(mid_, other.mid_);
    mpfr_swap(rad_, other.rad_);
  }
  return *this;
}

BigBall::~BigBall() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

// One ulp of the midpoint, added to the radius after an inexactly rounded op.
void BigBall::add_ulp_error() {
  if (mpfr_zero_p(mid_) || !mpfr_number_p(mid_)) return;
  mpfr_t ulp;
  mpfr_init2(ulp, kRadiusBits);
  mpfr_set_ui_2exp(ulp, 1, mpfr_get_exp(mid_) - prec_ + 1, MPFR_RNDU);
  mpfr_add(rad_, rad_, ulp, MPFR_RNDU);
  mpfr_clear(ulp);
}

void BigBall::bump_radius(mpfr_srcptr extra) {
  mpfr_add(rad_, rad_, extra, MPFR_RNDU);
}

BigBall BigBall::from_long(long v, long prec_bits) {
  BigBall b(prec_bits);
  mpfr_set_si(b.mid_, v, MPFR_RNDN);
  return b;
}

BigBall BigBall::from_rational(const Rational& q, long prec_bits) {
  BigBall b(prec_bits);
  int t = mpfr_set_q(b.mid_, q.get_mpq_t(), MPFR_RNDN);
  if (t != 0) b.add_ulp_error();
  return b;
}

BigBall BigBall::pi(long prec_bits) {
  BigBall b(prec_bits);
  mpfr_const_pi(b.mid_, MPFR_RNDN);
  b.add_ulp_error();
  return b;
}

bool BigBall::contains_zero() const {
  mpfr_t a;
  mpfr_init2(a, kRadiusBits);
  mpfr_abs(a, mid_, MPFR_RNDD);
  bool r = mpfr_cmp(a, rad_) <= 0;
  mpfr_clear(a);
  return r;
}

bool BigBall::is_positive() const {
  if (mpfr_sgn(mid_) <= 0) return false;
  mpfr_t lo;
  mpfr_init2(lo, kRadiusBits);
  mpfr_set(lo, mid_, MPFR_RNDD);
  mpfr_sub(lo, lo, rad_, MPFR_RNDD);
  bool r = mpfr_sgn(lo) > 0;
  mpfr_clear(lo);
  return r;
}

bool BigBall::is_negative() const { return neg().is_positive(); }

BigBall BigBall::neg() const {
  BigBall r(*this);
  mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

BigBall BigBall::abs() const {
  BigBall r(*this);
  mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

BigBall BigBall::add(const BigBall& o) const {
  BigBall r(prec_);
  int t = mpfr_add(r.mid_, mid_, o.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
  if (t != 0) r.add_ulp_error();
  return r;
}

BigBall BigBall::sub(const BigBall& o) const { return add(o.neg()); }

// |ab - mm'| <= |m| r' + |m'| r + r r', plus the rounding ulp.
BigBall BigBall::mul(const BigBall& o) const {
  BigBall r(prec_);
  int t = mpfr_mul(r.mid_, mid_, o.mid_, MPFR_RNDN);
  mpfr_t am, bm, acc, term;
  mpfr_inits2(kRadiusBits, am, bm, acc, term, static_cast<mpfr_ptr>(nullptr));
  mpfr_abs(am, mid_, MPFR_RNDU);
  mpfr_abs(bm, o.mid_, MPFR_RNDU);
  mpfr_mul(acc, am, o.rad_, MPFR_RNDU);
  mpfr_mul(term, bm, rad_, MPFR_RNDU);
  mpfr_add(acc, acc, term, MPFR_RNDU);
  mpfr_mul(term, rad_, o.rad_, MPFR_RNDU);
  mpfr_add(acc, acc, term, MPFR_RNDU);
  mpfr_set(r.rad_, acc, MPFR_RNDU);
  mpfr_clears(am, bm, acc, term, static_cast<mpfr_ptr>(nullptr));
  if (t != 0) r.add_ulp_error();
  return r;
}

BigBall BigBall::mul_rational(const Rational& q) const {
  return mul(BigBall::from_rational(q, prec_));
}

// |1/x - 1/m| <= r / (|m| (|m| - r)) for |m| > r.
BigBall BigBall::inv() const {
  if (contains_zero()) throw DomainError("division by a ball containing zero");
  BigBall r(prec_);
  int t = mpfr_ui_div(r.mid_, 1, mid_, MPFR_RNDN);
  mpfr_t am, den, bound;
  mpfr_inits2(kRadiusBits, am, den, bound, static_cast<mpfr_ptr>(nullptr));
  mpfr_abs(am, mid_, MPFR_RNDD);
  mpfr_sub(den, am, rad_, MPFR_RNDD);
  mpfr_mul(den, den, am, MPFR_RNDD);
  mpfr_div(bound, rad_, den, MPFR_RNDU);
  mpfr_set(r.rad_, bound, MPFR_RNDU);
  mpfr_clears(am, den, bound, static_cast<mpfr_ptr>(nullptr));
  if (t != 0) r.add_ulp_error();
  return r;
}

BigBall BigBall::div(const BigBall& o) const { return mul(o.inv()); }

// |sqrt x - sqrt m| <= r / (sqrt(m - r) + sqrt m).
BigBall BigBall::sqrt() const {
  mpfr_t lo;
  mpfr_init2(lo, kRadiusBits);
  mpfr_set(lo, mid_, MPFR_RNDD);
  mpfr_sub(lo, lo, rad_, MPFR_RNDD);
  if (mpfr_sgn(lo) < 0) {
    mpfr_clear(lo);
    throw DomainError("sqrt of a ball containing negative points");
  }
  BigBall r(prec_);
  int t = mpfr_sqrt(r.mid_, mid_, MPFR_RNDN);
  mpfr_t den, s;
  mpfr_inits2(kRadiusBits, den, s, static_cast<mpfr_ptr>(nullptr));
  mpfr_sqrt(den, lo, MPFR_RNDD);
  mpfr_set(s, mid_, MPFR_RNDD);
  mpfr_sqrt(s, s, MPFR_RNDD);
  mpfr_add(den, den, s, MPFR_RNDD);
  if (mpfr_sgn(den) > 0) {
    mpfr_div(s, rad_, den, MPFR_RNDU);
  } else {
    mpfr_set(s, rad_, MPFR_RNDU);  // ball touching zero: radius bound sqrt(rad) <= rad for rad tiny, be conservative
    mpfr_sqrt(s, s, MPFR_RNDU);
  }
  mpfr_set(r.rad_, s, MPFR_RNDU);
  mpfr_clears(den, s, static_cast<mpfr_ptr>(nullptr));
  mpfr_clear(lo);
  if (t != 0) r.add_ulp_error();
  return r;
}

// |log x - log m| <= r / (m - r) for m > r.
BigBall BigBall::log() const {
  if (!is_positive()) throw DomainError("log of a ball not strictly positive");
  BigBall r(prec_);
  int t = mpfr_log(r.mid_, mid_, MPFR_RNDN);
  mpfr_t lo, bound;
  mpfr_inits2(kRadiusBits, lo, bound, static_cast<mpfr_ptr>(nullptr));
  mpfr_set(lo, mid_, MPFR_RNDD);
  mpfr_sub(lo, lo, rad_, MPFR_RNDD);
  mpfr_div(bound, rad_, lo, MPFR_RNDU);
  mpfr_set(r.rad_, bound, MPFR_RNDU);
  mpfr_clears(lo, bound, static_cast<mpfr_ptr>(nullptr));
  if (t != 0) r.add_ulp_error();
  return r;
}

// |e^x - e^m| <= e^m (e^r - 1).
BigBall BigBall::exp() const {
  BigBall r(prec_);
  int t = mpfr_exp(r.mid_, mid_, MPFR_RNDN);
  mpfr_t em, f, bound;
  mpfr_inits2(kRadiusBits, em, f, bound, static_cast<mpfr_ptr>(nullptr));
  mpfr_set(em, r.mid_, MPFR_RNDU);
  mpfr_expm1(f, rad_, MPFR_RNDU);
  mpfr_mul(bound, em, f, MPFR_RNDU);
  mpfr_set(r.rad_, bound, MPFR_RNDU);
  mpfr_clears(em, f, bound, static_cast<mpfr_ptr>(nullptr));
  r.add_ulp_error();
  return r;
}

BigBall BigBall::sin() const {
  BigBall r(prec_);
  mpfr_sin(r.mid_, mid_, MPFR_RNDN);
  mpfr_set(r.rad_, rad_, MPFR_RNDU);  // |sin'| <= 1
  r.add_ulp_error();
  return r;
}

BigBall BigBall::cos() const {
  BigBall r(prec_);
  mpfr_cos(r.mid_, mid_, MPFR_RNDN);
  mpfr_set(r.rad_, rad_, MPFR_RNDU);
  r.add_ulp_error();
  return r;
}

BigBall BigBall::pow_long(long e) const {
  if (e == 0) return from_long(1, prec_);
  BigBall base = e > 0 ? *this : inv();
  unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  BigBall acc = from_long(1, prec_);
  while (k) {
    if (k & 1) acc = acc.mul(base);
    base = base.mul(base);
    k >>= 1;
  }
  return acc;
}

BigBall BigBall::pow_rational(const Rational& e) const {
  if (is_integer(e) && fits_long(e.get_num())) return pow_long(to_long(e.get_num()));
  if (!is_positive())
    throw DomainError("fractional power of a ball not strictly positive");
  return log().mul_rational(e).exp();
}

BigBall BigBall::hull(const BigBall& o) const {
  // center stays at *this's midpoint; radius covers o entirely
  BigBall gap = combined_gap(*this, o);
  BigBall r(*this);
  mpfr_t g;
  mpfr_init2(g, kRadiusBits);
  mpfr_add(g, gap.mid_, gap.rad_, MPFR_RNDU);
  if (mpfr_cmp(g, r.rad_) > 0) mpfr_set(r.rad_, g, MPFR_RNDU);
  mpfr_clear(g);
  return r;
}

BigBall BigBall::with_radius_increased(const BigBall& extra) const {
  BigBall r(*this);
  mpfr_t e;
  mpfr_init2(e, kRadiusBits);
  mpfr_abs(e, extra.mid_, MPFR_RNDU);
  mpfr_add(e, e, extra.rad_, MPFR_RNDU);
  r.bump_radius(e);
  mpfr_clear(e);
  return r;
}

BigBall BigBall::combined_gap(const BigBall& a, const BigBall& b) {
  BigBall d = a.sub(b).abs();
  BigBall r(d.prec_);
  mpfr_add(r.mid_, d.mid_, d.rad_, MPFR_RNDU);
  return r;
}

std::string BigBall::mid_string(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, mid_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string BigBall::rad_string() const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.3Rg", rad_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

namespace {

// "0.<digits>e<exp>" with the digit count mpfr guarantees to round-trip.
std::string roundtrip_string(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return "0";
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, 0, x, MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  return sign + "0." + digits + "e" + std::to_string(static_cast<long>(e));
}

}  // namespace

std::string BigBall::mid_roundtrip_string() const { return roundtrip_string(mid_); }

std::string BigBall::rad_roundtrip_string() const { return roundtrip_string(rad_); }

BigBall BigBall::from_strings(const std::string& mid, const std::string& rad,
                              long prec_bits) {
  BigBall b(prec_bits);
  if (mpfr_set_str(b.mid_, mid.c_str(), 10, MPFR_RNDN) != 0)
    throw DomainError("malformed midpoint string '" + mid + "'");
  if (mpfr_set_str(b.rad_, rad.c_str(), 10, MPFR_RNDU) != 0)
    throw DomainError("malformed radius string '" + rad + "'");
  if (mpfr_sgn(b.rad_) < 0) throw DomainError("negative radius");
  return b;
}

double BigBall::mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }

double BigBall::rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

long BigBall::magnitude_exponent_upper() const {
  mpfr_t hi;
  mpfr_init2(hi, kRadiusBits);
  mpfr_abs(hi, mid_, MPFR_RNDU);
  mpfr_add(hi, hi, rad_, MPFR_RNDU);
  long e = mpfr_zero_p(hi) ? -prec_ : mpfr_get_exp(hi);
  mpfr_clear(hi);
  return e;
}

CertifyResult certify_equal(const BigBall& a, const BigBall& b) {
  // distinct iff |mid_a - mid_b| > rad_a + rad_b, with outward rounding
  mpfr_t d, s;
  mpfr_init2(d, 64);
  mpfr_init2(s, 64);
  mpfr_sub(d, a.midpoint(), b.midpoint(), MPFR_RNDZ);
  mpfr_abs(d, d, MPFR_RNDZ);  // lower bound on the midpoint gap
  mpfr_add(s, a.radius(), b.radius(), MPFR_RNDU);
  bool distinct = mpfr_cmp(d, s) > 0;
  CertifyResult res;
  if (distinct) {
    mpfr_sub(d, d, s, MPFR_RNDZ);
    res = {CertifyOutcome::kProvablyDistinct, mpfr_get_d(d, MPFR_RNDZ)};
  } else {
    BigBall gap = BigBall::combined_gap(a, b);
    res = {CertifyOutcome::kIndistinguishable, gap.mid_double()};
  }
  mpfr_clear(d);
  mpfr_clear(s);
  return res;
}

}  // namespace gammacalc
