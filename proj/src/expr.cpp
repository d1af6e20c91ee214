#include "gammacalc/expr.hpp"

#include <cctype>
#include <cstddef>
#include <utility>
#include <vector>

#include "gammacalc/errors.hpp"
#include "gammacalc/numeric.hpp"
#include "gammacalc/relations.hpp"

namespace gammacalc {

namespace {

// Recursive-descent parser over the raw byte string. Offsets reported in
// errors are 1-based, pointing at the byte where the expected token would
// have to start.
class Parser {
 public:
  explicit Parser(const std::string& input) : in_(input) {}

  GammaTermExpr parse() {
    GammaTermExpr tree;
    parse_product(&tree.factors);
    skip_ws();
    if (pos_ != in_.size())
      throw SyntaxError(pos_ + 1, "'*', '/', or end of input");
    return tree;
  }

 private:
  void skip_ws() {
    while (pos_ < in_.size() &&
           std::isspace(static_cast<unsigned char>(in_[pos_])))
      ++pos_;
  }

  bool at(char c) {
    skip_ws();
    return pos_ < in_.size() && in_[pos_] == c;
  }

  bool consume(char c) {
    if (!at(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const std::string& expected) {
    if (!consume(c)) throw SyntaxError(pos_ + 1, expected);
  }

  bool peek_digit_at(std::size_t i) const {
    return i < in_.size() && std::isdigit(static_cast<unsigned char>(in_[i]));
  }

  // Matches the word starting at the current position (after whitespace)
  // and consumes it on success. Words are maximal alphabetic runs, so "pie"
  // does not match "pi".
  bool consume_word(const char* word) {
    skip_ws();
    std::size_t i = pos_;
    const char* w = word;
    while (*w && i < in_.size() && in_[i] == *w) ++i, ++w;
    if (*w) return false;
    if (i < in_.size() && std::isalpha(static_cast<unsigned char>(in_[i])))
      return false;
    pos_ = i;
    return true;
  }

  // rational := '-'? digits ('/' digits)?, one token with no internal
  // whitespace. The '/' is consumed only when a digit follows immediately,
  // so "2 / 3" and "2/ 3" stay divisions of two integers.
  Rational parse_rational_token(const std::string& expected) {
    skip_ws();
    std::size_t start = pos_;
    std::size_t i = pos_;
    if (i < in_.size() && in_[i] == '-') ++i;
    if (!peek_digit_at(i)) throw SyntaxError(start + 1, expected);
    while (peek_digit_at(i)) ++i;
    std::size_t den_start = 0;
    if (i < in_.size() && in_[i] == '/' && peek_digit_at(i + 1)) {
      den_start = i + 1;
      ++i;
      while (peek_digit_at(i)) ++i;
    }
    pos_ = i;
    if (den_start != 0) {
      bool all_zero = true;
      for (std::size_t j = den_start; j < i; ++j)
        if (in_[j] != '0') all_zero = false;
      if (all_zero) throw SyntaxError(den_start + 1, "a nonzero denominator");
    }
    Rational q(in_.substr(start, i - start));
    q.canonicalize();
    return q;
  }

  // primary := 'Gamma' '(' rational ')' | 'pi' | rational | '(' expr ')'
  // A parenthesized group is appended to *out as its flattened factors;
  // the other alternatives append exactly one factor. Returns the index of
  // the first factor appended (callers apply '^' and '/' from there on).
  std::size_t parse_primary(std::vector<ExprFactor>* out) {
    const std::size_t first = out->size();
    if (consume_word("Gamma")) {
      expect('(', "'('");
      Rational arg = parse_rational_token("a rational");
      expect(')', ")");
      out->push_back({ExprFactor::Kind::kGamma, std::move(arg), Rational(1)});
      return first;
    }
    if (consume_word("pi")) {
      out->push_back({ExprFactor::Kind::kPi, Rational(0), Rational(1)});
      return first;
    }
    if (consume('(')) {
      parse_product(out);
      expect(')', ")");
      return first;
    }
    skip_ws();
    if (pos_ < in_.size() &&
        (in_[pos_] == '-' ||
         std::isdigit(static_cast<unsigned char>(in_[pos_])))) {
      Rational v = parse_rational_token("a rational");
      out->push_back({ExprFactor::Kind::kNumber, std::move(v), Rational(1)});
      return first;
    }
    throw SyntaxError(pos_ + 1, "'Gamma', 'pi', a rational, or '('");
  }

  // term := primary ('^' rational)?
  void parse_term(std::vector<ExprFactor>* out) {
    const std::size_t first = parse_primary(out);
    if (consume('^')) {
      Rational e = parse_rational_token("a rational exponent");
      for (std::size_t i = first; i < out->size(); ++i)
        (*out)[i].exponent *= e;
    }
  }

  // expr := term (('*' | '/') term)*
  void parse_product(std::vector<ExprFactor>* out) {
    parse_term(out);
    for (;;) {
      bool divide = false;
      if (consume('*')) {
        divide = false;
      } else if (consume('/')) {
        divide = true;
      } else {
        return;
      }
      const std::size_t first = out->size();
      parse_term(out);
      if (divide)
        for (std::size_t i = first; i < out->size(); ++i)
          (*out)[i].exponent = -(*out)[i].exponent;
    }
  }

  const std::string& in_;
  std::size_t pos_ = 0;
};

std::string render_base(const ExprFactor& f) {
  switch (f.kind) {
    case ExprFactor::Kind::kGamma:
      return "Gamma(" + to_string(f.value) + ")";
    case ExprFactor::Kind::kPi:
      return "pi";
    case ExprFactor::Kind::kNumber:
      return to_string(f.value);
  }
  return {};
}

}  // namespace

GammaTermExpr parse_expr(const std::string& input) {
  return Parser(input).parse();
}

std::string GammaTermExpr::render_text() const {
  if (factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const ExprFactor& f = factors[i];
    Rational shown = f.exponent;
    if (i == 0) {
      out = render_base(f);
    } else {
      const bool divide = sgn(shown) < 0;
      if (divide) shown = -shown;
      out += divide ? " / " : " * ";
      out += render_base(f);
    }
    if (cmp(shown, 1) != 0) out += "^" + to_string(shown);
  }
  return out;
}

Monomial GammaTermExpr::simplify() const {
  std::vector<std::pair<Rational, Rational>> gammas;
  Monomial rest = Monomial::one();
  Rational pi_e(0);
  for (const ExprFactor& f : factors) {
    if (sgn(f.exponent) == 0) continue;
    switch (f.kind) {
      case ExprFactor::Kind::kGamma:
        gammas.emplace_back(f.value, f.exponent);
        break;
      case ExprFactor::Kind::kPi:
        pi_e += f.exponent;
        break;
      case ExprFactor::Kind::kNumber:
        rest = rest.mul(Monomial::from_rational(f.value).pow(f.exponent));
        break;
    }
  }
  return rest.mul(Monomial::pi_power(pi_e)).mul(simplify_gamma_term(gammas));
}

BigBall GammaTermExpr::eval(const PrecisionConfig& cfg) const {
  const long bits = cfg.working_bits();
  BigBall acc = BigBall::from_long(1, bits);
  for (const ExprFactor& f : factors) {
    if (sgn(f.exponent) == 0) continue;
    BigBall base(bits);
    switch (f.kind) {
      case ExprFactor::Kind::kGamma:
        base = gamma_numeric_bits(f.value, bits);
        break;
      case ExprFactor::Kind::kPi:
        base = BigBall::pi(bits);
        break;
      case ExprFactor::Kind::kNumber:
        base = BigBall::from_rational(f.value, bits);
        break;
    }
    acc = acc.mul(base.pow_rational(f.exponent));
  }
  return acc;
}

}  // namespace gammacalc
