#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gammacalc/bigfloat.hpp"
#include "gammacalc/rational.hpp"

namespace gammacalc {

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

// Real field Q(sqrt r_0, sqrt r_1, ..., sqrt r_{d-1}) where each radicand
// r_i is a positive non-square element of the subfield generated by the
// previous roots. Immutable after construction.
class Tower {
 public:
  // radicands[i] holds the 2^i coordinates of r_i over the depth-i subtower.
  // Every radicand is checked to be positive and, when rational, not an
  // exact square; deeper squareness would surface as a division by zero or a
  // failed unit-circle identity downstream.
  static TowerPtr make(std::vector<std::vector<Rational>> radicands,
                       int check_digits = 50);

  int depth() const { return static_cast<int>(radicands_.size()); }
  std::size_t dim() const { return std::size_t(1) << depth(); }
  const std::vector<Rational>& radicand(int i) const { return radicands_[i]; }

  // Enclosures of sqrt(r_0), ..., sqrt(r_{d-1}), built bottom-up.
  std::vector<BigBall> root_values(long prec_bits) const;

 private:
  explicit Tower(std::vector<std::vector<Rational>> radicands)
      : radicands_(std::move(radicands)) {}
  std::vector<std::vector<Rational>> radicands_;
};

// Element of a Tower in the multilinear basis: index bit i selects root i,
// so coords has size 2^depth. Value type; all arithmetic is exact.
class TowerElement {
 public:
  static TowerElement constant(TowerPtr t, Rational q);
  static TowerElement root(TowerPtr t, int i);
  static TowerElement from_coords(TowerPtr t, std::vector<Rational> coords);

  const TowerPtr& tower() const { return tower_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  // Requires is_rational().
  Rational rational_value() const;

  TowerElement neg() const;
  TowerElement add(const TowerElement& o) const;
  TowerElement sub(const TowerElement& o) const;
  TowerElement mul(const TowerElement& o) const;
  TowerElement mul_rational(const Rational& q) const;
  // DomainError on zero (or on a radicand inconsistency making a norm vanish).
  TowerElement inv() const;
  TowerElement div(const TowerElement& o) const;
  TowerElement pow_long(long e) const;

  bool operator==(const TowerElement& o) const;
  bool operator!=(const TowerElement& o) const { return !(*this == o); }

  BigBall eval(long prec_bits) const;
  // "[q0, q1, ...]" in basis order; used in verification reports.
  std::string coords_string() const;

 private:
  TowerElement(TowerPtr t, std::vector<Rational> coords);
  TowerPtr tower_;
  std::vector<Rational> coords_;
};

}  // namespace gammacalc
