#include "gammacalc/atoms.hpp"

#include <array>
#include <map>

#include "gammacalc/errors.hpp"

namespace gammacalc {

namespace {

struct AtomInfo {
  std::string_view name;
  std::string_view latex;
};

constexpr std::array<AtomInfo, kAtomCount> kAtomInfo = {{
    {"2", "2"},
    {"3", "3"},
    {"5", "5"},
    {"sqrt2+1", "\\sqrt2+1"},
    {"sqrt3+1", "\\sqrt3+1"},
    {"sqrt3+sqrt2", "\\sqrt3+\\sqrt2"},
    {"sqrt5+sqrt3", "\\sqrt5+\\sqrt3"},
    {"phi", "\\phi"},
    {"sqrt15+psi", "\\sqrt{15}+\\psi"},
    {"sqrt15+psi*", "\\sqrt{15}+\\psi^\\star"},
    {"sqrt10+sqrtphi", "\\sqrt{10}+\\sqrt\\phi"},
    {"sqrt10+sqrtphi*", "\\sqrt{10}+\\sqrt{\\phi^\\star}"},
    {"sqrt6+sqrt5", "\\sqrt6+\\sqrt5"},
    {"sqrt10+3", "\\sqrt{10}+3"},
    {"sqrtphi+sqrt5", "\\sqrt\\phi+\\sqrt5"},
    {"sqrtphi+sqrt3", "\\sqrt\\phi+\\sqrt3"},
    {"sqrt5+sqrtphi*", "\\sqrt5+\\sqrt{\\phi^\\star}"},
    {"sqrt3+sqrtphi*", "\\sqrt3+\\sqrt{\\phi^\\star}"},
    {"sqrt2-1", "\\sqrt2-1"},
    {"sqrt3-1", "\\sqrt3-1"},
    {"sqrt3-sqrt2", "\\sqrt3-\\sqrt2"},
    {"sqrt5-sqrt3", "\\sqrt5-\\sqrt3"},
    {"phi*", "\\phi^\\star"},
    {"psi", "\\psi"},
    {"psi*", "\\psi^\\star"},
    {"sqrt15-psi", "\\sqrt{15}-\\psi"},
    {"sqrt15-psi*", "\\sqrt{15}-\\psi^\\star"},
    {"sqrt10-sqrtphi", "\\sqrt{10}-\\sqrt\\phi"},
    {"sqrt10-sqrtphi*", "\\sqrt{10}-\\sqrt{\\phi^\\star}"},
    {"sqrt6-sqrt5", "\\sqrt6-\\sqrt5"},
    {"sqrt10-3", "\\sqrt{10}-3"},
    {"sqrtphi-sqrt5", "\\sqrt\\phi-\\sqrt5"},
    {"sqrt5-sqrtphi*", "\\sqrt5-\\sqrt{\\phi^\\star}"},
    {"sqrtphi-sqrt3", "\\sqrt\\phi-\\sqrt3"},
    {"sqrt3-sqrtphi*", "\\sqrt3-\\sqrt{\\phi^\\star}"},
}};

using Rewrite = std::vector<std::pair<Atom, Rational>>;

Rewrite make_rewrite(std::initializer_list<std::pair<Atom, Rational>> items) {
  return Rewrite(items);
}

Rational half() { return Rational(1, 2); }

// Each entry: conjugate-product reduction (a+b)(a-b) = a^2-b^2, expressed
// over the generator set; verified against the radical definitions in tests.
const std::array<Rewrite, kAtomCount>& rewrites() {
  static const std::array<Rewrite, kAtomCount> table = [] {
    std::array<Rewrite, kAtomCount> t;
    for (int i = 0; i < kGeneratorCount; ++i)
      t[i] = make_rewrite({{static_cast<Atom>(i), Rational(1)}});
    auto set = [&t](Atom a, Rewrite r) { t[static_cast<int>(a)] = std::move(r); };
    set(Atom::kSqrt2M1, make_rewrite({{Atom::kSqrt2P1, Rational(-1)}}));
    set(Atom::kSqrt3M1, make_rewrite({{Atom::kTwo, Rational(1)}, {Atom::kSqrt3P1, Rational(-1)}}));
    set(Atom::kSqrt3MSqrt2, make_rewrite({{Atom::kSqrt3PSqrt2, Rational(-1)}}));
    set(Atom::kSqrt5MSqrt3, make_rewrite({{Atom::kTwo, Rational(1)}, {Atom::kSqrt5PSqrt3, Rational(-1)}}));
    set(Atom::kPhiS, make_rewrite({{Atom::kTwo, Rational(2)}, {Atom::kFive, Rational(1)}, {Atom::kPhi, Rational(-1)}}));
    set(Atom::kPsi, make_rewrite({{Atom::kTwo, Rational(-3, 2)}, {Atom::kFive, Rational(-1, 2)}, {Atom::kPhi, Rational(3, 2)}}));
    set(Atom::kPsiS, make_rewrite({{Atom::kTwo, Rational(3, 2)}, {Atom::kFive, Rational(1)}, {Atom::kPhi, Rational(-3, 2)}}));
    set(Atom::kSqrt15MPsi, make_rewrite({{Atom::kTwo, Rational(3)}, {Atom::kFive, Rational(1)}, {Atom::kPhi, Rational(-1)}, {Atom::kSqrt15PPsi, Rational(-1)}}));
    set(Atom::kSqrt15MPsiS, make_rewrite({{Atom::kTwo, Rational(1)}, {Atom::kPhi, Rational(1)}, {Atom::kSqrt15PPsiS, Rational(-1)}}));
    set(Atom::kSqrt10MSqrtPhi, make_rewrite({{Atom::kTwo, Rational(2)}, {Atom::kFive, Rational(1)}, {Atom::kPhi, Rational(-1)}, {Atom::kSqrt10PSqrtPhi, Rational(-1)}}));
    set(Atom::kSqrt10MSqrtPhiS, make_rewrite({{Atom::kPhi, Rational(1)}, {Atom::kSqrt10PSqrtPhiS, Rational(-1)}}));
    set(Atom::kSqrt6MSqrt5, make_rewrite({{Atom::kSqrt6PSqrt5, Rational(-1)}}));
    set(Atom::kSqrt10M3, make_rewrite({{Atom::kSqrt10P3, Rational(-1)}}));
    set(Atom::kSqrtPhiMSqrt5, make_rewrite({{Atom::kFive, half()}, {Atom::kSqrtPhiPSqrt5, Rational(-1)}}));
    set(Atom::kSqrt5MSqrtPhiS, make_rewrite({{Atom::kFive, half()}, {Atom::kSqrt5PSqrtPhiS, Rational(-1)}}));
    set(Atom::kSqrtPhiMSqrt3, make_rewrite({{Atom::kTwo, Rational(-3)}, {Atom::kFive, Rational(-3, 2)}, {Atom::kPhi, Rational(3)}, {Atom::kSqrtPhiPSqrt3, Rational(-1)}}));
    set(Atom::kSqrt3MSqrtPhiS, make_rewrite({{Atom::kTwo, Rational(3)}, {Atom::kFive, Rational(3, 2)}, {Atom::kPhi, Rational(-3)}, {Atom::kSqrt3PSqrtPhiS, Rational(-1)}}));
    return t;
  }();
  return table;
}

}  // namespace

bool is_generator(Atom a) { return static_cast<int>(a) < kGeneratorCount; }

std::string_view atom_name(Atom a) { return kAtomInfo[static_cast<int>(a)].name; }

std::string_view atom_latex(Atom a) { return kAtomInfo[static_cast<int>(a)].latex; }

Atom atom_from_name(std::string_view name) {
  static const std::map<std::string_view, Atom> index = [] {
    std::map<std::string_view, Atom> m;
    for (int i = 0; i < kAtomCount; ++i) m[kAtomInfo[i].name] = static_cast<Atom>(i);
    return m;
  }();
  auto it = index.find(name);
  if (it == index.end()) throw UnknownAtom("unknown constant '" + std::string(name) + "'");
  return it->second;
}

const std::vector<std::pair<Atom, Rational>>& atom_rewrite(Atom a) {
  return rewrites()[static_cast<int>(a)];
}

BigBall atom_value(Atom a, long prec) {
  auto n = [prec](long v) { return BigBall::from_long(v, prec); };
  auto sq = [prec](long v) { return BigBall::from_long(v, prec).sqrt(); };
  BigBall sqrt5 = sq(5);
  switch (a) {
    case Atom::kTwo: return n(2);
    case Atom::kThree: return n(3);
    case Atom::kFive: return n(5);
    case Atom::kSqrt2P1: return sq(2).add(n(1));
    case Atom::kSqrt3P1: return sq(3).add(n(1));
    case Atom::kSqrt3PSqrt2: return sq(3).add(sq(2));
    case Atom::kSqrt5PSqrt3: return sqrt5.add(sq(3));
    case Atom::kPhi: return n(5).add(sqrt5);
    case Atom::kSqrt15PPsi: return sq(15).add(atom_value(Atom::kPsi, prec));
    case Atom::kSqrt15PPsiS: return sq(15).add(atom_value(Atom::kPsiS, prec));
    case Atom::kSqrt10PSqrtPhi: return sq(10).add(atom_value(Atom::kPhi, prec).sqrt());
    case Atom::kSqrt10PSqrtPhiS: return sq(10).add(atom_value(Atom::kPhiS, prec).sqrt());
    case Atom::kSqrt6PSqrt5: return sq(6).add(sqrt5);
    case Atom::kSqrt10P3: return sq(10).add(n(3));
    case Atom::kSqrtPhiPSqrt5: return atom_value(Atom::kPhi, prec).sqrt().add(sqrt5);
    case Atom::kSqrtPhiPSqrt3: return atom_value(Atom::kPhi, prec).sqrt().add(sq(3));
    case Atom::kSqrt5PSqrtPhiS: return sqrt5.add(atom_value(Atom::kPhiS, prec).sqrt());
    case Atom::kSqrt3PSqrtPhiS: return sq(3).add(atom_value(Atom::kPhiS, prec).sqrt());
    case Atom::kSqrt2M1: return sq(2).sub(n(1));
    case Atom::kSqrt3M1: return sq(3).sub(n(1));
    case Atom::kSqrt3MSqrt2: return sq(3).sub(sq(2));
    case Atom::kSqrt5MSqrt3: return sqrt5.sub(sq(3));
    case Atom::kPhiS: return n(5).sub(sqrt5);
    case Atom::kPsi: return n(5).add(sqrt5.mul(n(2))).sqrt();
    case Atom::kPsiS: return n(5).sub(sqrt5.mul(n(2))).sqrt();
    case Atom::kSqrt15MPsi: return sq(15).sub(atom_value(Atom::kPsi, prec));
    case Atom::kSqrt15MPsiS: return sq(15).sub(atom_value(Atom::kPsiS, prec));
    case Atom::kSqrt10MSqrtPhi: return sq(10).sub(atom_value(Atom::kPhi, prec).sqrt());
    case Atom::kSqrt10MSqrtPhiS: return sq(10).sub(atom_value(Atom::kPhiS, prec).sqrt());
    case Atom::kSqrt6MSqrt5: return sq(6).sub(sqrt5);
    case Atom::kSqrt10M3: return sq(10).sub(n(3));
    case Atom::kSqrtPhiMSqrt5: return atom_value(Atom::kPhi, prec).sqrt().sub(sqrt5);
    case Atom::kSqrt5MSqrtPhiS: return sqrt5.sub(atom_value(Atom::kPhiS, prec).sqrt());
    case Atom::kSqrtPhiMSqrt3: return atom_value(Atom::kPhi, prec).sqrt().sub(sq(3));
    case Atom::kSqrt3MSqrtPhiS: return sq(3).sub(atom_value(Atom::kPhiS, prec).sqrt());
    case Atom::kCount: break;
  }
  throw UnknownAtom("invalid atom id");
}

}  // namespace gammacalc
