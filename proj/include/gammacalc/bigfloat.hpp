#pragma once

#include <mpfr.h>

#include <string>

#include "gammacalc/rational.hpp"

namespace gammacalc {

struct PrecisionConfig {
  int decimal_digits = 50;
  int guard_digits = 10;
  // >= ceil((decimal_digits + guard_digits) * log2(10))
  long working_bits() const;
};

// Midpoint-radius interval with an arbitrary-precision midpoint and a
// low-precision upward-rounded radius. Every operation returns a ball
// containing the exact image of all points of the operand balls.
class BigBall {
 public:
  explicit BigBall(long prec_bits);
  BigBall(const BigBall& other);
  BigBall(BigBall&& other) noexcept;
  BigBall& operator=(const BigBall& other);
  BigBall& operator=(BigBall&& other) noexcept;
  ~BigBall();

  static BigBall from_long(long v, long prec_bits);
  static BigBall from_rational(const Rational& q, long prec_bits);
  static BigBall pi(long prec_bits);
  // Rebuilds a ball from decimal strings (see roundtrip_string); the radius
  // is parsed with upward rounding so containment is preserved.
  static BigBall from_strings(const std::string& mid, const std::string& rad,
                              long prec_bits);

  long precision() const { return prec_; }
  mpfr_srcptr midpoint() const { return mid_; }
  mpfr_srcptr radius() const { return rad_; }

  bool is_exact() const { return mpfr_zero_p(rad_); }
  bool contains_zero() const;
  // true iff every point of the ball is > 0 (resp. < 0).
  bool is_positive() const;
  bool is_negative() const;

  BigBall neg() const;
  BigBall abs() const;
  BigBall add(const BigBall& o) const;
  BigBall sub(const BigBall& o) const;
  BigBall mul(const BigBall& o) const;
  BigBall mul_rational(const Rational& q) const;
  // Errors with DomainError if the divisor ball contains zero.
  BigBall inv() const;
  BigBall div(const BigBall& o) const;
  // DomainError if the ball contains negative points.
  BigBall sqrt() const;
  // DomainError unless strictly positive.
  BigBall log() const;
  BigBall exp() const;
  BigBall sin() const;
  BigBall cos() const;
  BigBall pow_long(long e) const;
  // Integer exponents work on any ball; fractional ones require a strictly
  // positive ball (computed as exp(e*log x)).
  BigBall pow_rational(const Rational& e) const;

  // Widens the radius so the ball also contains `o`'s ball.
  BigBall hull(const BigBall& o) const;
  BigBall with_radius_increased(const BigBall& extra) const;

  // Upper bound on |midpoint difference| plus both radii; exact result of
  // certify_equal's Indistinguishable branch.
  static BigBall combined_gap(const BigBall& a, const BigBall& b);

  // midpoint rounded to `digits` significant decimals.
  std::string mid_string(int digits) const;
  std::string rad_string() const;
  // Decimal strings with enough digits to reproduce the exact binary values
  // when re-read at the same precision.
  std::string mid_roundtrip_string() const;
  std::string rad_roundtrip_string() const;
  double mid_double() const;
  // Upper bound; may round to +inf, never under-reports.
  double rad_double() const;

  // |mid| + rad <= 2^k for the smallest convenient k; used in tail bounds.
  long magnitude_exponent_upper() const;

 private:
  mpfr_t mid_;
  mpfr_t rad_;  // fixed 32-bit precision, always rounded upward
  long prec_;

  void add_ulp_error();
  void bump_radius(mpfr_srcptr extra);
};

enum class CertifyOutcome { kProvablyDistinct, kIndistinguishable };

struct CertifyResult {
  CertifyOutcome outcome;
  // For kIndistinguishable: |mid_a - mid_b| + rad_a + rad_b (upper bound).
  // For kProvablyDistinct: a lower bound on the gap between the balls.
  double within;
};

CertifyResult certify_equal(const BigBall& a, const BigBall& b);

}  // namespace gammacalc
