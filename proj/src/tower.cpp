#include "gammacalc/tower.hpp"

#include <cstddef>

#include "gammacalc/errors.hpp"

namespace gammacalc {

namespace {

using Coords = std::vector<Rational>;

// out += a*b over the depth-`level` subtower of t.
void mul_rec(const Tower& t, int level, const Rational* a, const Rational* b,
             Rational* out) {
  if (level == 0) {
    out[0] += a[0] * b[0];
    return;
  }
  const std::size_t half = std::size_t(1) << (level - 1);
  // (a0 + a1 r)(b0 + b1 r) = a0 b0 + a1 b1 rad + (a0 b1 + a1 b0) r
  mul_rec(t, level - 1, a, b, out);
  mul_rec(t, level - 1, a, b + half, out + half);
  mul_rec(t, level - 1, a + half, b, out + half);
  Coords cross(half, Rational(0));
  mul_rec(t, level - 1, a + half, b + half, cross.data());
  mul_rec(t, level - 1, cross.data(), t.radicand(level - 1).data(), out);
}

bool all_zero(const Rational* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != 0) return false;
  return true;
}

Coords inv_rec(const Tower& t, int level, const Rational* a) {
  const std::size_t n = std::size_t(1) << level;
  if (all_zero(a, n)) throw DomainError("tower element has no inverse (zero)");
  if (level == 0) return {Rational(1) / a[0]};
  const std::size_t half = n / 2;
  // 1/(a0 + a1 r) = (a0 - a1 r) / (a0^2 - a1^2 rad); the denominator lies in
  // the subtower and vanishes only if rad were a square there.
  Coords den(half, Rational(0));
  mul_rec(t, level - 1, a, a, den.data());
  Coords hi_sq(half, Rational(0));
  mul_rec(t, level - 1, a + half, a + half, hi_sq.data());
  Coords hi_rad(half, Rational(0));
  mul_rec(t, level - 1, hi_sq.data(), t.radicand(level - 1).data(), hi_rad.data());
  for (std::size_t i = 0; i < half; ++i) den[i] -= hi_rad[i];
  if (all_zero(den.data(), half))
    throw DomainError("tower norm vanished; a radicand is a square in its subfield");
  Coords den_inv = inv_rec(t, level - 1, den.data());
  Coords out(n, Rational(0));
  mul_rec(t, level - 1, a, den_inv.data(), out.data());
  Coords hi_out(half, Rational(0));
  mul_rec(t, level - 1, a + half, den_inv.data(), hi_out.data());
  for (std::size_t i = 0; i < half; ++i) out[half + i] = -hi_out[i];
  return out;
}

BigBall eval_rec(int level, const Rational* a, const std::vector<BigBall>& roots,
                 long prec) {
  if (level == 0) return BigBall::from_rational(a[0], prec);
  const std::size_t half = std::size_t(1) << (level - 1);
  BigBall lo = eval_rec(level - 1, a, roots, prec);
  BigBall hi = eval_rec(level - 1, a + half, roots, prec);
  return lo.add(hi.mul(roots[level - 1]));
}

bool rational_is_square(const Rational& q) {
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

}  // namespace

TowerPtr Tower::make(std::vector<std::vector<Rational>> radicands,
                     int check_digits) {
  for (auto& r : radicands)
    for (auto& q : r) q.canonicalize();
  TowerPtr t(new Tower(std::move(radicands)));
  PrecisionConfig cfg;
  cfg.decimal_digits = check_digits;
  const long prec = cfg.working_bits();
  std::vector<BigBall> roots;
  for (int i = 0; i < t->depth(); ++i) {
    const auto& rad = t->radicand(i);
    if (rad.size() != (std::size_t(1) << i))
      throw DomainError("radicand has wrong coordinate count");
    BigBall v = eval_rec(i, rad.data(), roots, prec);
    if (!v.is_positive())
      throw DomainError("radicand is not positive at adjunction " + std::to_string(i));
    if (all_zero(rad.data() + 1, rad.size() - 1) && rational_is_square(rad[0]))
      throw DomainError("radicand is a perfect square at adjunction " + std::to_string(i));
    roots.push_back(v.sqrt());
  }
  return t;
}

std::vector<BigBall> Tower::root_values(long prec_bits) const {
  std::vector<BigBall> roots;
  for (int i = 0; i < depth(); ++i)
    roots.push_back(eval_rec(i, radicands_[i].data(), roots, prec_bits).sqrt());
  return roots;
}

TowerElement::TowerElement(TowerPtr t, std::vector<Rational> coords)
    : tower_(std::move(t)), coords_(std::move(coords)) {
  for (auto& q : coords_) q.canonicalize();
}

TowerElement TowerElement::constant(TowerPtr t, Rational q) {
  std::vector<Rational> c(t->dim(), Rational(0));
  c[0] = std::move(q);
  return TowerElement(std::move(t), std::move(c));
}

TowerElement TowerElement::root(TowerPtr t, int i) {
  if (i < 0 || i >= t->depth()) throw DomainError("root index out of range");
  std::vector<Rational> c(t->dim(), Rational(0));
  c[std::size_t(1) << i] = 1;
  return TowerElement(std::move(t), std::move(c));
}

TowerElement TowerElement::from_coords(TowerPtr t, std::vector<Rational> coords) {
  if (coords.size() != t->dim())
    throw DomainError("coordinate vector has wrong length");
  return TowerElement(std::move(t), std::move(coords));
}

bool TowerElement::is_zero() const { return all_zero(coords_.data(), coords_.size()); }

bool TowerElement::is_rational() const {
  return all_zero(coords_.data() + 1, coords_.size() - 1);
}

Rational TowerElement::rational_value() const {
  if (!is_rational()) throw DomainError("element is not rational");
  return coords_[0];
}

TowerElement TowerElement::neg() const {
  std::vector<Rational> c = coords_;
  for (auto& q : c) q = -q;
  return TowerElement(tower_, std::move(c));
}

TowerElement TowerElement::add(const TowerElement& o) const {
  if (tower_ != o.tower_) throw DomainError("elements of different towers");
  std::vector<Rational> c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return TowerElement(tower_, std::move(c));
}

TowerElement TowerElement::sub(const TowerElement& o) const { return add(o.neg()); }

TowerElement TowerElement::mul(const TowerElement& o) const {
  if (tower_ != o.tower_) throw DomainError("elements of different towers");
  std::vector<Rational> out(coords_.size(), Rational(0));
  mul_rec(*tower_, tower_->depth(), coords_.data(), o.coords_.data(), out.data());
  return TowerElement(tower_, std::move(out));
}

TowerElement TowerElement::mul_rational(const Rational& q_raw) const {
  Rational q = q_raw;
  q.canonicalize();
  std::vector<Rational> c = coords_;
  for (auto& x : c) x *= q;
  return TowerElement(tower_, std::move(c));
}

TowerElement TowerElement::inv() const {
  return TowerElement(tower_, inv_rec(*tower_, tower_->depth(), coords_.data()));
}

TowerElement TowerElement::div(const TowerElement& o) const { return mul(o.inv()); }

TowerElement TowerElement::pow_long(long e) const {
  if (e < 0) return inv().pow_long(-e);
  TowerElement acc = constant(tower_, Rational(1));
  TowerElement base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc = acc.mul(base);
    if (k >>= 1) base = base.mul(base);
  }
  return acc;
}

bool TowerElement::operator==(const TowerElement& o) const {
  return tower_ == o.tower_ && coords_ == o.coords_;
}

BigBall TowerElement::eval(long prec_bits) const {
  std::vector<BigBall> roots = tower_->root_values(prec_bits);
  return eval_rec(tower_->depth(), coords_.data(), roots, prec_bits);
}

std::string TowerElement::coords_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += to_string(coords_[i]);
  }
  return out + "]";
}

}  // namespace gammacalc
