#pragma once

#include <string>
#include <vector>

#include "gammacalc/bigfloat.hpp"
#include "gammacalc/monomial.hpp"
#include "gammacalc/rational.hpp"

namespace gammacalc {

// Independent numeric gamma oracle: ball containing Gamma(x) with radius
// <= 10^{-decimal_digits} * |Gamma(x)|. Stirling's series with the rigorous
// first-omitted-term remainder, after shifting the argument upward through
// Gamma(x+1) = x Gamma(x) until it clears a precision-dependent threshold.
// Deliberately shares no data with the symbolic tables it verifies.
// Throws PoleError at nonpositive integers.
BigBall gamma_numeric(const Rational& x, const PrecisionConfig& cfg = {});
// Same oracle addressed by bit precision (shape used by eval callbacks).
BigBall gamma_numeric_bits(const Rational& x, long prec_bits);

// Full numeric enclosure of a monomial: coefficient, pi power, generator
// powers, gamma powers (via gamma_numeric), and any numeric tail.
BigBall eval_monomial(const Monomial& m, const PrecisionConfig& cfg = {});

// Arithmetic-geometric mean of two positive balls; quadratically convergent.
// `iterations`, when non-null, receives the number of refinement steps.
// DomainError unless both operands are strictly positive.
BigBall agm(const BigBall& a, const BigBall& b, int* iterations = nullptr);

// Complete elliptic integral of the first kind in the modulus convention:
// K(k) = pi / (2 agm(1, sqrt(1-k^2))). DomainError unless k^2 < 1.
BigBall elliptic_K(const BigBall& k);

struct FormulaCheck {
  std::string name;
  double relative_deviation = 0.0;  // upper bound on |rhs/lhs - 1|
  bool pass = false;
};

struct EllipticReport {
  std::vector<FormulaCheck> formulas;
  double max_relative_deviation = 0.0;
  double tolerance = 0.0;  // 10^{-(decimal_digits-5)}
  bool all_pass = true;
  std::string summary() const;
};

// Evaluates the six K-function product formulas for Gamma(1/3), Gamma(1/4),
// Gamma(1/8), Gamma(1/15), Gamma(1/20), Gamma(1/24) and compares each
// against gamma_numeric.
EllipticReport verify_elliptic_formulas(const PrecisionConfig& cfg = {});

// Hyperelliptic integrals on y^2 = x^5 - 1:
//   H_1 = int_0^1 dz / sqrt(1-z^5),   H_2 = int_0^1 z dz / sqrt(1-z^5),
// by tanh-sinh quadrature (the inverse-square-root endpoint is absorbed by
// the double-exponential weight; 1-z^5 is factored so no cancellation
// occurs near z=1). `level_errors`, when non-null, receives the per-level
// refinement estimates. ConvergenceError if the level cap is reached before
// the tolerance 10^{-(decimal_digits-10)}.
BigBall hyperelliptic_H(int j, const PrecisionConfig& cfg = {},
                        std::vector<double>* level_errors = nullptr);

}  // namespace gammacalc
