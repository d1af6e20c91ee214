#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammacalc/bigfloat.hpp"
#include "gammacalc/rational.hpp"

namespace gammacalc {

// Fixed catalogue of surd constants. The first kGeneratorCount entries are
// multiplicatively independent generators; every later atom rewrites into a
// product of generator powers (see atom_rewrite).
enum class Atom : std::uint8_t {
  kTwo,
  kThree,
  kFive,
  kSqrt2P1,         // sqrt2+1
  kSqrt3P1,         // sqrt3+1
  kSqrt3PSqrt2,     // sqrt3+sqrt2
  kSqrt5PSqrt3,     // sqrt5+sqrt3
  kPhi,             // phi = 5+sqrt5
  kSqrt15PPsi,      // sqrt15+psi,  psi = sqrt(5+2 sqrt5)
  kSqrt15PPsiS,     // sqrt15+psi*, psi* = sqrt(5-2 sqrt5)
  kSqrt10PSqrtPhi,  // sqrt10+sqrt(phi)
  kSqrt10PSqrtPhiS, // sqrt10+sqrt(phi*), phi* = 5-sqrt5
  kSqrt6PSqrt5,     // sqrt6+sqrt5
  kSqrt10P3,        // sqrt10+3
  kSqrtPhiPSqrt5,   // sqrt(phi)+sqrt5
  kSqrtPhiPSqrt3,   // sqrt(phi)+sqrt3
  kSqrt5PSqrtPhiS,  // sqrt5+sqrt(phi*)
  kSqrt3PSqrtPhiS,  // sqrt3+sqrt(phi*)
  // end of generators
  kSqrt2M1,         // sqrt2-1
  kSqrt3M1,
  kSqrt3MSqrt2,
  kSqrt5MSqrt3,
  kPhiS,            // phi*
  kPsi,
  kPsiS,            // psi*
  kSqrt15MPsi,
  kSqrt15MPsiS,
  kSqrt10MSqrtPhi,
  kSqrt10MSqrtPhiS,
  kSqrt6MSqrt5,
  kSqrt10M3,
  kSqrtPhiMSqrt5,
  kSqrt5MSqrtPhiS,
  kSqrtPhiMSqrt3,
  kSqrt3MSqrtPhiS,
  kCount,
};

inline constexpr int kAtomCount = static_cast<int>(Atom::kCount);
inline constexpr int kGeneratorCount = static_cast<int>(Atom::kSqrt2M1);

bool is_generator(Atom a);

// Canonical text name, e.g. "sqrt15+psi*", "phi", "2".
std::string_view atom_name(Atom a);
// LaTeX body (no grouping), e.g. "\\sqrt{15}+\\psi^\\star".
std::string_view atom_latex(Atom a);
// Inverse of atom_name; throws UnknownAtom.
Atom atom_from_name(std::string_view name);

// Exponent vector over generators with product exactly equal to the atom.
// Identity for generators themselves.
const std::vector<std::pair<Atom, Rational>>& atom_rewrite(Atom a);

// Numeric enclosure from the defining radical expression.
BigBall atom_value(Atom a, long prec_bits);

}  // namespace gammacalc
