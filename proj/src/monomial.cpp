#include "gammacalc/monomial.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "gammacalc/errors.hpp"

namespace gammacalc {

namespace {

// Precision used when a fractional power forces an inexact coefficient
// residue into the tail. Chosen well above every verification tolerance.
constexpr long kForcedTailBits = 400;

using ojson = nlohmann::ordered_json;

bool is_simple_latex_atom(Atom a) {
  std::string_view n = atom_name(a);
  return n.find('+') == std::string_view::npos && n.find('-') == std::string_view::npos;
}

std::string exponent_suffix(const Rational& e) {
  if (e == 1) return "";
  return "^" + to_string(e);
}

std::string latex_exponent(const Rational& e) {
  if (e == 1) return "";
  return "^{" + to_string(e) + "}";
}

}  // namespace

const std::vector<Rational>& gamma_basis_points() {
  static const std::vector<Rational> pts = {
      Rational(1, 120), Rational(1, 60), Rational(1, 40), Rational(1, 24),
      Rational(1, 20),  Rational(7, 120), Rational(1, 15), Rational(3, 40),
      Rational(11, 120), Rational(7, 60), Rational(1, 8),  Rational(7, 40),
      Rational(1, 5),   Rational(1, 4),  Rational(1, 3),  Rational(2, 5)};
  return pts;
}

bool is_gamma_basis_point(const Rational& q) {
  const auto& pts = gamma_basis_points();
  return std::find(pts.begin(), pts.end(), q) != pts.end();
}

Monomial::Factor Monomial::Factor::atom_power(Atom a, Rational e) {
  return Factor{Kind::kAtom, a, Rational(0), std::move(e)};
}
Monomial::Factor Monomial::Factor::pi_power(Rational e) {
  return Factor{Kind::kPi, Atom::kTwo, Rational(0), std::move(e)};
}
Monomial::Factor Monomial::Factor::gamma_power(Rational arg, Rational e) {
  return Factor{Kind::kGamma, Atom::kTwo, std::move(arg), std::move(e)};
}
Monomial::Factor Monomial::Factor::number_power(Rational q, Rational e) {
  return Factor{Kind::kNumber, Atom::kTwo, std::move(q), std::move(e)};
}

Monomial::Monomial() : coeff_(1), pi_exp_(0) {}

void Monomial::fold_atom(Atom a, const Rational& e) {
  if (e == 0) return;
  for (const auto& [gen, w] : atom_rewrite(a)) gens_[gen] += e * w;
}

void Monomial::fold_gamma(const Rational& arg, const Rational& e) {
  if (!is_gamma_basis_point(arg))
    throw UnknownAtom("Gamma(" + to_string(arg) + ") is not a basis symbol");
  if (e == 0) return;
  gammas_[arg] += e;
}

void Monomial::fold_number(const Rational& q, const Rational& e) {
  if (sgn(q) <= 0)
    throw NonPositiveCoefficient("rational factor " + to_string(q) + " is not positive");
  if (e == 0 || q == 1) return;
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  static const std::pair<unsigned long, Atom> kSmallPrimes[] = {
      {2, Atom::kTwo}, {3, Atom::kThree}, {5, Atom::kFive}};
  for (const auto& [p, atom] : kSmallPrimes) {
    mpz_class pz(static_cast<unsigned long>(p)), out;
    long a = static_cast<long>(mpz_remove(out.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()));
    num = out;
    long b = static_cast<long>(mpz_remove(out.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()));
    den = out;
    if (a != b) gens_[atom] += e * Rational(a - b);
  }
  if (num == 1 && den == 1) return;
  if (is_integer(e)) {
    if (!fits_long(e.get_num()))
      throw DomainError("exponent too large for exact coefficient power");
    coeff_ *= pow_rational(Rational(num, den), to_long(e.get_num()));
    return;
  }
  // Fractional power of the coprime-to-30 residue: exact only for perfect
  // s-th powers, otherwise the irrational value moves to the tail.
  const mpz_class& s_z = e.get_den();
  if (fits_long(s_z) && fits_long(e.get_num())) {
    unsigned long s = static_cast<unsigned long>(to_long(s_z));
    mpz_class rn, rd;
    int exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), s);
    int exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), s);
    if (exact_n != 0 && exact_d != 0) {
      coeff_ *= pow_rational(Rational(rn, rd), to_long(e.get_num()));
      return;
    }
  }
  BigBall residue =
      BigBall::from_rational(Rational(num, den), kForcedTailBits).pow_rational(e);
  absorb_tail(residue);
}

void Monomial::absorb_tail(const BigBall& t) {
  tail_ = tail_ ? tail_->mul(t) : t;
}

Monomial Monomial::canonicalize(const std::vector<Factor>& raw) {
  Monomial m;
  for (Factor f : raw) {
    // mpq_class leaves literals like 2/10 unreduced, and GMP comparison
    // assumes lowest terms; normalize every incoming rational here.
    f.value.canonicalize();
    f.exponent.canonicalize();
    switch (f.kind) {
      case Factor::Kind::kAtom: m.fold_atom(f.atom, f.exponent); break;
      case Factor::Kind::kPi: m.pi_exp_ += f.exponent; break;
      case Factor::Kind::kGamma: m.fold_gamma(f.value, f.exponent); break;
      case Factor::Kind::kNumber: m.fold_number(f.value, f.exponent); break;
    }
  }
  std::erase_if(m.gens_, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(m.gammas_, [](const auto& kv) { return kv.second == 0; });
  return m;
}

Monomial Monomial::one() { return Monomial(); }

Monomial Monomial::from_rational(const Rational& q) {
  return canonicalize({Factor::number_power(q, Rational(1))});
}

Monomial Monomial::from_atom(Atom a, const Rational& e) {
  return canonicalize({Factor::atom_power(a, e)});
}

Monomial Monomial::pi_power(const Rational& e) {
  return canonicalize({Factor::pi_power(e)});
}

Monomial Monomial::gamma_power(const Rational& arg, const Rational& e) {
  return canonicalize({Factor::gamma_power(arg, e)});
}

bool Monomial::is_unit() const {
  return coeff_ == 1 && pi_exp_ == 0 && gens_.empty() && gammas_.empty() && !tail_;
}

Rational Monomial::gamma_exponent(const Rational& arg) const {
  auto it = gammas_.find(arg);
  return it == gammas_.end() ? Rational(0) : it->second;
}

Monomial Monomial::mul(const Monomial& o) const {
  Monomial m = *this;
  m.coeff_ *= o.coeff_;
  m.pi_exp_ += o.pi_exp_;
  for (const auto& [g, e] : o.gens_) {
    Rational& slot = m.gens_[g];
    slot += e;
    if (slot == 0) m.gens_.erase(g);
  }
  for (const auto& [b, e] : o.gammas_) {
    Rational& slot = m.gammas_[b];
    slot += e;
    if (slot == 0) m.gammas_.erase(b);
  }
  if (o.tail_) m.absorb_tail(*o.tail_);
  return m;
}

Monomial Monomial::div(const Monomial& o) const { return mul(o.inv()); }

Monomial Monomial::inv() const { return pow(Rational(-1)); }

Monomial Monomial::pow(const Rational& e_raw) const {
  Rational e = e_raw;
  e.canonicalize();
  if (e == 0) return one();
  Monomial m;
  m.fold_number(coeff_, e);
  m.pi_exp_ += pi_exp_ * e;
  for (const auto& [g, x] : gens_) {
    Rational& slot = m.gens_[g];
    slot += x * e;
    if (slot == 0) m.gens_.erase(g);
  }
  for (const auto& [b, x] : gammas_) m.gammas_[b] = x * e;
  if (tail_) m.absorb_tail(tail_->pow_rational(e));
  return m;
}

Monomial Monomial::mul_rational(const Rational& q_raw) const {
  Rational q = q_raw;
  q.canonicalize();
  Monomial m = *this;
  m.fold_number(q, Rational(1));
  std::erase_if(m.gens_, [](const auto& kv) { return kv.second == 0; });
  return m;
}

Monomial Monomial::with_tail(const BigBall& t) const {
  Monomial m = *this;
  m.absorb_tail(t);
  return m;
}

bool Monomial::operator==(const Monomial& o) const {
  if (coeff_ != o.coeff_ || pi_exp_ != o.pi_exp_ || gens_ != o.gens_ ||
      gammas_ != o.gammas_)
    return false;
  if (tail_.has_value() != o.tail_.has_value()) return false;
  if (!tail_) return true;
  return mpfr_equal_p(tail_->midpoint(), o.tail_->midpoint()) != 0 &&
         mpfr_equal_p(tail_->radius(), o.tail_->radius()) != 0;
}

std::string Monomial::render_text() const {
  std::vector<std::string> parts;
  if (coeff_ != 1) parts.push_back(to_string(coeff_));
  if (pi_exp_ != 0) parts.push_back("pi" + exponent_suffix(pi_exp_));
  for (const auto& [g, e] : gens_)
    parts.push_back(std::string(atom_name(g)) + exponent_suffix(e));
  for (const auto& [b, e] : gammas_)
    parts.push_back("Gamma(" + to_string(b) + ")" + exponent_suffix(e));
  if (tail_)
    parts.push_back("[" + tail_->mid_string(30) + " +/- " + tail_->rad_string() + "]");
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " * " + parts[i];
  return out;
}

std::string Monomial::render_latex() const {
  std::vector<std::string> parts;
  if (coeff_ != 1) {
    if (is_integer(coeff_)) {
      parts.push_back(coeff_.get_num().get_str());
    } else {
      parts.push_back("\\frac{" + coeff_.get_num().get_str() + "}{" +
                      coeff_.get_den().get_str() + "}");
    }
  }
  if (pi_exp_ != 0) parts.push_back("\\pi" + latex_exponent(pi_exp_));
  for (const auto& [g, e] : gens_) {
    std::string base(atom_latex(g));
    if (is_simple_latex_atom(g)) {
      if (e == Rational(1, 2))
        parts.push_back("\\sqrt{" + base + "}");
      else
        parts.push_back(base + latex_exponent(e));
    } else {
      parts.push_back("\\left(" + base + "\\right)" + latex_exponent(e));
    }
  }
  for (const auto& [b, e] : gammas_)
    parts.push_back("\\Gamma(" + to_string(b) + ")" + latex_exponent(e));
  if (tail_)
    parts.push_back("\\left[" + tail_->mid_string(30) + " \\pm " +
                    tail_->rad_string() + "\\right]");
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += "\\," + parts[i];
  return out;
}

std::string Monomial::render_json() const {
  ojson j;
  j["coefficient"] = to_string(coeff_);
  j["pi"] = to_string(pi_exp_);
  ojson gens = ojson::object();
  for (const auto& [g, e] : gens_) gens[std::string(atom_name(g))] = to_string(e);
  j["generators"] = std::move(gens);
  ojson gammas = ojson::object();
  for (const auto& [b, e] : gammas_) gammas[to_string(b)] = to_string(e);
  j["gammas"] = std::move(gammas);
  if (tail_) {
    ojson t;
    t["mid"] = tail_->mid_roundtrip_string();
    t["rad"] = tail_->rad_roundtrip_string();
    t["prec"] = tail_->precision();
    j["tail"] = std::move(t);
  }
  return j.dump();
}

Monomial Monomial::parse_json(const std::string& text) {
  ojson j = ojson::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw SyntaxError(0, "a JSON monomial object");
  for (const auto& [key, _] : j.items()) {
    if (key != "coefficient" && key != "pi" && key != "generators" &&
        key != "gammas" && key != "tail")
      throw SyntaxError(0, "only coefficient/pi/generators/gammas/tail fields");
  }
  auto rational_field = [&](const ojson& v, const char* what) {
    if (!v.is_string()) throw SyntaxError(0, std::string(what) + " as a \"p/q\" string");
    auto q = parse_rational(v.get<std::string>());
    if (!q) throw SyntaxError(0, std::string(what) + " as a \"p/q\" string");
    return *q;
  };
  if (!j.contains("coefficient") || !j.contains("pi") || !j.contains("generators") ||
      !j.contains("gammas"))
    throw SyntaxError(0, "coefficient, pi, generators and gammas fields");

  std::vector<Factor> raw;
  raw.push_back(Factor::number_power(rational_field(j["coefficient"], "coefficient"),
                                     Rational(1)));
  raw.push_back(Factor::pi_power(rational_field(j["pi"], "pi exponent")));
  if (!j["generators"].is_object()) throw SyntaxError(0, "generators object");
  for (const auto& [name, e] : j["generators"].items()) {
    Atom a = atom_from_name(name);
    if (!is_generator(a))
      throw UnknownAtom("'" + name + "' is not a generator");
    raw.push_back(Factor::atom_power(a, rational_field(e, "generator exponent")));
  }
  if (!j["gammas"].is_object()) throw SyntaxError(0, "gammas object");
  for (const auto& [arg_text, e] : j["gammas"].items()) {
    auto arg = parse_rational(arg_text);
    if (!arg) throw SyntaxError(0, "gamma argument as \"k/n\"");
    raw.push_back(Factor::gamma_power(*arg, rational_field(e, "gamma exponent")));
  }
  Monomial m = canonicalize(raw);
  if (j.contains("tail")) {
    const ojson& t = j["tail"];
    if (!t.is_object() || !t.contains("mid") || !t.contains("rad") ||
        !t.contains("prec") || !t["mid"].is_string() || !t["rad"].is_string() ||
        !t["prec"].is_number_integer())
      throw SyntaxError(0, "tail object with mid/rad strings and prec");
    m = m.with_tail(BigBall::from_strings(t["mid"].get<std::string>(),
                                          t["rad"].get<std::string>(),
                                          t["prec"].get<long>()));
  }
  return m;
}

BigBall Monomial::eval(
    long prec_bits,
    const std::function<BigBall(const Rational&, long)>& gamma_value) const {
  BigBall acc = BigBall::from_rational(coeff_, prec_bits);
  if (pi_exp_ != 0) acc = acc.mul(BigBall::pi(prec_bits).pow_rational(pi_exp_));
  for (const auto& [g, e] : gens_)
    acc = acc.mul(atom_value(g, prec_bits).pow_rational(e));
  for (const auto& [b, e] : gammas_)
    acc = acc.mul(gamma_value(b, prec_bits).pow_rational(e));
  if (tail_) acc = acc.mul(*tail_);
  return acc;
}

BigBall Monomial::eval_algebraic(long prec_bits) const {
  if (!gammas_.empty())
    throw DomainError("monomial contains gamma factors; supply gamma values");
  return eval(prec_bits, nullptr);
}

Monomial parse_monomial_product(const std::string& text) {
  std::vector<Monomial::Factor> raw;
  std::istringstream in(text);
  std::string token;
  size_t consumed = 0;
  while (in >> token) {
    size_t offset = text.find(token, consumed);
    consumed = offset + token.size();
    Rational exponent(1);
    std::string base = token;
    if (size_t caret = token.find('^'); caret != std::string::npos) {
      base = token.substr(0, caret);
      auto e = parse_rational(token.substr(caret + 1));
      if (!e) throw SyntaxError(offset + caret + 1, "rational exponent");
      exponent = *e;
    }
    if (base == "pi") {
      raw.push_back(Monomial::Factor::pi_power(exponent));
    } else if (base.size() > 1 && base[0] == 'G') {
      auto arg = parse_rational(base.substr(1));
      if (!arg) throw SyntaxError(offset + 1, "rational gamma argument");
      raw.push_back(Monomial::Factor::gamma_power(*arg, exponent));
    } else {
      bool is_atom = true;
      Atom a = Atom::kTwo;
      try {
        a = atom_from_name(base);
      } catch (const UnknownAtom&) {
        is_atom = false;
      }
      if (is_atom) {
        raw.push_back(Monomial::Factor::atom_power(a, exponent));
      } else {
        auto q = parse_rational(base);
        if (!q) throw SyntaxError(offset, "pi, G<k>/<n>, constant name, or rational");
        raw.push_back(Monomial::Factor::number_power(*q, exponent));
      }
    }
  }
  return Monomial::canonicalize(raw);
}

}  // namespace gammacalc
