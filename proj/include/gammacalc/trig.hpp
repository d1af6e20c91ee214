#pragma once

#include "gammacalc/monomial.hpp"
#include "gammacalc/rational.hpp"
#include "gammacalc/report.hpp"
#include "gammacalc/tower.hpp"

namespace gammacalc {

// exp(i pi angle) with both coordinates exact in a shared tower. The angle
// is kept modulo 2.
struct UnitCirclePoint {
  Rational angle;
  TowerElement re;
  TowerElement im;

  // Complex product; both points must live in the same tower.
  UnitCirclePoint mul(const UnitCirclePoint& o) const;
  // Complex conjugate = inverse on the unit circle.
  UnitCirclePoint conj() const;
  // Integer powers (negative allowed).
  UnitCirclePoint pow_long(long e) const;
};

// Q(sqrt5, sqrt2, sqrt3, psi) of degree 16: hosts every constant atom and
// the unit-circle points with angle denominator dividing 60.
TowerPtr tower60();
// Q(sqrt2, sqrt3, sqrt(sqrt2+1), sqrt(sqrt3+1), sqrt(sqrt3+sqrt2), 2^{1/4})
// of degree 64: hosts the points with angle denominator 8 or 24.
TowerPtr tower24();

// A constant atom as an element of tower60 (defined for all atoms) or of
// tower24 (defined for 2, 3, 5 and the sqrt2+-1, sqrt3+-1, sqrt3+-sqrt2
// family; throws UnknownAtom otherwise).
TowerElement atom_element_60(Atom a);
TowerElement atom_element_24(Atom a);

// Exact exp(i pi k/n) for 0 < k/n < 2 (DomainError otherwise) with n
// dividing 60 (tower60) or n in {8, 24} after reduction (tower24); any
// other denominator throws UnsupportedDenominator.
UnitCirclePoint exp_i_pi(long k, long n);

// Exact sin(pi x) as a gamma-free Monomial for 0 < x < 1 (DomainError
// otherwise) with the denominator of x dividing 24 or 60
// (UnsupportedDenominator otherwise).
Monomial sin_pi_exact(const Rational& x);

// Re-derives the closed-form tables behind exp_i_pi from scratch inside the
// towers: unit-circle membership and z^n = (-1)^k for every tabulated point,
// the pairwise product cross-checks, the surd product identities, and
// 100-digit numeric enclosures of every table entry.
CheckReport verify_lemma_tables();

}  // namespace gammacalc
