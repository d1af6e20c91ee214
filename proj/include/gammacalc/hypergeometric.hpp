#pragma once

#include <vector>

#include "gammacalc/bigfloat.hpp"
#include "gammacalc/monomial.hpp"
#include "gammacalc/rational.hpp"

namespace gammacalc {

// Parameters of the Gauss series 2F1(a,b;c;1). Well-posed only when c is not
// a nonpositive integer and c-a-b > 0 (convergence at unit argument).
struct HypergeometricSpec {
  Rational a;
  Rational b;
  Rational c;
};

// Closed form of 2F1(a,b;c;1) as a canonical Monomial via the gamma quotient
// Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).
//
// Gamma factors with equal arguments cancel before any reduction, so specs
// whose quotient collapses (b = 0 gives the unit Monomial for any admissible
// a, c) are accepted regardless of the arguments' denominators.
//
// Errors: DivergentAtOne when c-a-b <= 0; PoleError when c, or any surviving
// quotient argument, is a nonpositive integer; UnsupportedDenominator when a
// surviving argument has a denominator dividing none of 24, 60, 120.
Monomial gauss_value(const HypergeometricSpec& spec);

// Independent numeric value of 2F1(a,b;c;1): partial sums of the defining
// series sum_k (a)_k (b)_k / ((c)_k k!), with the remainder evaluated from
// the k^{-1-(c-a-b)} asymptotic of the terms (second-order expansion with
// exact rational coefficients plus a Hurwitz-zeta tail; the third-order
// remainder constant is calibrated from the computed terms and folded into
// the radius, together with a cross-check against a half-length partial sum).
// The default configuration targets about 15 decimal digits.
//
// If a or b is a nonpositive integer the series terminates and is summed
// exactly, with no asymptotic machinery.
//
// Errors: PoleError when c is a nonpositive integer; DivergentAtOne when
// c-a-b <= 0; SlowConvergence when c-a-b < 1/20 or the required number of
// terms exceeds the iteration budget.
BigBall gauss_numeric(const HypergeometricSpec& spec,
                      const PrecisionConfig& cfg = PrecisionConfig{15, 10});

// Beta value B(a,b) = Gamma(a) Gamma(b) / Gamma(a+b) as a canonical Monomial.
// Errors as gauss_value: PoleError / UnsupportedDenominator from reducing
// the three gamma factors (equal arguments cancel first here as well).
Monomial beta_value(const Rational& a, const Rational& b);

// One entry of the built-in hypergeometric self-check set: a spec together
// with its independently tabulated surd closed form, written in the
// parse_monomial_product syntax.
struct GaussSelfCheck {
  HypergeometricSpec spec;
  const char* surd_product;
};

// The four unit-argument evaluations whose closed forms are pure surds
// (no pi, no gamma). Verification sweeps check gauss_value against the
// surd form exactly and against gauss_numeric numerically.
const std::vector<GaussSelfCheck>& gauss_selfchecks();

}  // namespace gammacalc
