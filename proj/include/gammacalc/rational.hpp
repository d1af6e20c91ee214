#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "gammacalc/errors.hpp"

namespace gammacalc {

// Exact rationals are GMP mpq_class throughout; values are always kept
// canonicalized (lowest terms, positive denominator).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool fits_long(const mpz_class& z) { return z.fits_slong_p(); }

inline long to_long(const mpz_class& z) { return z.get_si(); }

// "p" or "p/q", canonical.
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "[sign]digits[/digits]". Returns nullopt on malformed input or a
// zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

inline Rational floor_rational(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

inline bool denominator_divides(const Rational& q, unsigned long n) {
  const mpz_class& den = q.get_den();
  if (!den.fits_ulong_p()) return false;
  return n % den.get_ui() == 0;
}

// q = k/n in lowest terms with n | 24 or n | 60.
inline bool denominator_divides_24_or_60(const Rational& q) {
  return denominator_divides(q, 24) || denominator_divides(q, 60);
}

// q^e for integer e.
inline Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = e > 0 ? base : Rational(1) / base;
  unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  Rational acc(1);
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

struct RationalLess {
  bool operator()(const Rational& a, const Rational& b) const { return cmp(a, b) < 0; }
};

}  // namespace gammacalc
