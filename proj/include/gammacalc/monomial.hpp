#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gammacalc/atoms.hpp"
#include "gammacalc/bigfloat.hpp"
#include "gammacalc/rational.hpp"

namespace gammacalc {

// Arguments at which a gamma symbol may appear in a Monomial: the ten base
// points plus the six extension points. Sorted ascending.
const std::vector<Rational>& gamma_basis_points();
bool is_gamma_basis_point(const Rational& q);

// Canonical positive real of the form
//   q * pi^e0 * prod g_i^e_i * prod Gamma(b_j)^f_j   (optional numeric tail)
// with q > 0 coprime to 30 (all 2,3,5 content lives in the generator
// exponents), generators only in the exponent map, gamma arguments always
// basis points, and no zero exponents stored. Immutable value type.
class Monomial {
 public:
  struct Factor {
    enum class Kind { kAtom, kPi, kGamma, kNumber };
    Kind kind;
    Atom atom = Atom::kTwo;  // kAtom only
    Rational value;          // kGamma: argument; kNumber: the factor
    Rational exponent;

    static Factor atom_power(Atom a, Rational e);
    static Factor pi_power(Rational e);
    static Factor gamma_power(Rational arg, Rational e);
    static Factor number_power(Rational q, Rational e);
  };

  Monomial();  // the unit

  // Folds the raw factor list into canonical form. Minus-form atoms are
  // rewritten into generators; rational factors are split into 2,3,5 powers
  // plus a coprime-to-30 remainder. Idempotent on its own output.
  static Monomial canonicalize(const std::vector<Factor>& raw);

  static Monomial one();
  static Monomial from_rational(const Rational& q);
  static Monomial from_atom(Atom a, const Rational& e = Rational(1));
  static Monomial pi_power(const Rational& e);
  static Monomial gamma_power(const Rational& arg, const Rational& e = Rational(1));

  bool is_unit() const;
  bool is_gamma_free() const { return gammas_.empty(); }
  bool has_tail() const { return tail_.has_value(); }

  const Rational& coefficient() const { return coeff_; }
  const Rational& pi_exponent() const { return pi_exp_; }
  const std::map<Atom, Rational>& generator_exponents() const { return gens_; }
  const std::map<Rational, Rational, RationalLess>& gamma_exponents() const { return gammas_; }
  const std::optional<BigBall>& tail() const { return tail_; }
  // 0 when absent.
  Rational gamma_exponent(const Rational& arg) const;

  Monomial mul(const Monomial& o) const;
  Monomial div(const Monomial& o) const;
  Monomial inv() const;
  // Scales every exponent; the coefficient power stays exact when it is a
  // perfect power, otherwise its irrational residue moves to the tail.
  Monomial pow(const Rational& e) const;
  Monomial mul_rational(const Rational& q) const;
  Monomial with_tail(const BigBall& t) const;

  // Componentwise on canonical fields; tails compare bit-exactly.
  bool operator==(const Monomial& o) const;
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::string render_text() const;
  std::string render_latex() const;
  std::string render_json() const;
  // Inverse of render_json; throws SyntaxError on malformed input.
  static Monomial parse_json(const std::string& text);

  // Numeric enclosure of the gamma-free part (coefficient, pi, generators,
  // tail). DomainError if a gamma factor is present.
  BigBall eval_algebraic(long prec_bits) const;
  // Full enclosure; gamma values supplied by the callback.
  BigBall eval(long prec_bits,
               const std::function<BigBall(const Rational&, long)>& gamma_value) const;

 private:
  Rational coeff_;
  Rational pi_exp_;
  std::map<Atom, Rational> gens_;
  std::map<Rational, Rational, RationalLess> gammas_;
  std::optional<BigBall> tail_;

  void fold_atom(Atom a, const Rational& e);
  void fold_number(const Rational& q, const Rational& e);
  void fold_gamma(const Rational& arg, const Rational& e);
  void absorb_tail(const BigBall& t);
};

// Parses the whitespace-separated product token format used by the embedded
// data tables: tokens are `pi`, `G<k>/<n>`, an atom name, or a positive
// rational, each with an optional `^p/q` exponent. Empty input is the unit.
Monomial parse_monomial_product(const std::string& text);

}  // namespace gammacalc
