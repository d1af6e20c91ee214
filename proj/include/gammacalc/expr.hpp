#pragma once

#include <string>
#include <vector>

#include "gammacalc/bigfloat.hpp"
#include "gammacalc/monomial.hpp"
#include "gammacalc/rational.hpp"

namespace gammacalc {

// One multiplicative factor of a parsed gamma-term expression: a gamma
// value, the constant pi, or a rational literal, carrying its net rational
// exponent (a '/' in the source negates the exponent of the factor that
// follows it; '^' exponents stack multiplicatively through parentheses).
struct ExprFactor {
  enum class Kind { kGamma, kPi, kNumber };

  Kind kind = Kind::kNumber;
  Rational value;     // gamma argument or literal value; unused for kPi
  Rational exponent;  // net exponent

  bool operator==(const ExprFactor& o) const {
    return kind == o.kind && cmp(value, o.value) == 0 &&
           cmp(exponent, o.exponent) == 0;
  }
  bool operator!=(const ExprFactor& o) const { return !(*this == o); }
};

// A product of factors in source order. Grammar accepted by parse_expr:
//
//   expr    := term (('*' | '/') term)*
//   term    := primary ('^' rational)?
//   primary := 'Gamma' '(' rational ')' | 'pi' | rational | '(' expr ')'
//
// with '*' and '/' left-associative, whitespace ignored between tokens,
// and rational := '-'? digits ('/' digits)? as a single token (no internal
// whitespace). A parenthesized group flattens into the surrounding product;
// an exponent on the group multiplies the exponents of every factor inside,
// and a leading '/' negates them all.
struct GammaTermExpr {
  std::vector<ExprFactor> factors;

  bool operator==(const GammaTermExpr& o) const { return factors == o.factors; }
  bool operator!=(const GammaTermExpr& o) const { return !(*this == o); }

  // Canonical text form; parse_expr(render_text()) reproduces the tree.
  std::string render_text() const;

  // Exact closed form: every gamma factor is reduced over the basis, pi and
  // rational literals fold into the monomial directly (a literal raised to
  // a fractional power keeps any irrational residue as a certified numeric
  // tail). Factors with exponent zero are dropped without inspection.
  // Throws the reduction errors (PoleError, UnsupportedDenominator,
  // NegativeValue) and NonPositiveCoefficient for a literal <= 0.
  Monomial simplify() const;

  // Direct numeric enclosure, independent of the reduction tables: gamma
  // factors through the Stirling oracle, pi and literals exactly. Handles
  // any rational gamma argument away from the poles. Factors with exponent
  // zero are dropped without inspection. Throws PoleError at nonpositive
  // integer gamma arguments and DomainError for a fractional power of a
  // nonpositive literal.
  BigBall eval(const PrecisionConfig& cfg = {}) const;
};

// Parses the grammar above. Errors carry a 1-based byte offset into the
// input and the expected-token description, e.g. "Gamma(1/3" fails at
// offset 10 expecting ")".
GammaTermExpr parse_expr(const std::string& input);

}  // namespace gammacalc
