#include "gammacalc/relations.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gammacalc/bigfloat.hpp"
#include "gammacalc/errors.hpp"
#include "gammacalc/trig.hpp"

namespace gammacalc {

namespace {

using GammaExponents = std::map<Rational, Rational, RationalLess>;

// Precision for the sine enclosures entering the denominator-40/120 tier;
// comfortably above the 60 decimal digits the entries promise.
constexpr long kExtensionTailBits = 240;

Rational Q(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

void erase_zero_exponents(GammaExponents& m) {
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
}

// ---------------------------------------------------------------------------
// Embedded reduction table: Gamma(k/n) for every non-basis k/n in (0,1)
// with n | 24 or n | 60, over the ten-point basis. Token format is the
// parse_monomial_product grammar; keys are in lowest terms.
// ---------------------------------------------------------------------------

constexpr const char* kReductionTableData = R"TBL(
1/2 := pi^1/2
2/3 := 2 pi 3^-1/2 G1/3^-1
3/4 := pi 2^1/2 G1/4^-1
3/5 := pi 2^1/2 phi*^1/2 5^-1/2 G2/5^-1
4/5 := pi 2^1/2 phi^1/2 5^-1/2 G1/5^-1
1/6 := pi^-1/2 3^1/2 2^-1/3 G1/3^2
5/6 := pi^3/2 2^4/3 3^-1/2 G1/3^-2
3/8 := pi^1/2 sqrt2-1^1/2 G1/4^-1 G1/8
5/8 := pi^1/2 2^3/4 G1/4 G1/8^-1
7/8 := pi 2^3/4 sqrt2+1^1/2 G1/8^-1
1/10 := pi^-1/2 phi^1/2 2^-7/10 G1/5 G2/5
3/10 := pi^1/2 phi* 2^-3/5 5^-1/2 G1/5 G2/5^-1
7/10 := pi^1/2 2^3/5 G1/5^-1 G2/5
9/10 := pi^3/2 2^7/10 phi^1/2 5^-1/2 G1/5^-1 G2/5^-1
1/12 := pi^-1/2 3^3/8 sqrt3+1^1/2 2^-1/4 G1/3 G1/4
5/12 := pi^1/2 2^1/4 sqrt3-1^1/2 3^-1/8 G1/4 G1/3^-1
7/12 := pi^1/2 2^1/4 3^1/8 sqrt3-1^1/2 G1/3 G1/4^-1
11/12 := pi^3/2 2^3/4 sqrt3+1^1/2 3^-3/8 G1/3^-1 G1/4^-1
2/15 := phi*^1/2 sqrt15-psi*^1/2 2^-1 3^-7/20 5^-1/3 G1/3^-1 G2/5 G1/15
4/15 := phi^1/2 sqrt15-psi^1/2 sqrt15-psi*^1/2 2^-3/2 3^-3/10 5^-1/2 G1/5^-1 G2/5 G1/15
7/15 := 3^9/20 phi*^1/2 sqrt15+psi*^1/2 2^-1 5^-1/6 G1/3 G1/5 G1/15^-1
8/15 := pi 2^1/2 sqrt15-psi^1/2 3^-9/20 5^-1/3 G1/3^-1 G1/5^-1 G1/15
11/15 := 2 pi 3^3/10 G1/5 G2/5^-1 G1/15^-1
13/15 := pi 2^1/2 3^7/20 sqrt15+psi^1/2 5^-1/6 G1/3 G2/5^-1 G1/15^-1
14/15 := pi phi^1/2 sqrt15+psi^1/2 sqrt15+psi*^1/2 2^-1/2 5^-1/2 G1/15^-1
3/20 := pi^1/2 phi* sqrt10-sqrtphi*^1/2 2^-21/20 5^-7/8 G2/5^-1 G1/20
7/20 := pi^1/2 sqrt10-sqrtphi^1/2 2^-3/20 5^-3/8 G1/5^-1 G1/20
9/20 := pi sqrt10-sqrtphi^1/2 sqrt10-sqrtphi*^1/2 2^-1/5 5^-1/2 G1/5^-1 G2/5^-1 G1/20
11/20 := 2^1/5 phi^1/2 G1/5 G2/5 G1/20^-1
13/20 := pi^1/2 2^3/20 phi*^1/2 sqrt10+sqrtphi*^1/2 5^-1/8 G1/5 G1/20^-1
17/20 := pi^1/2 2^1/20 phi^1/2 sqrt10+sqrtphi^1/2 5^-1/8 G2/5 G1/20^-1
19/20 := pi phi^1/2 sqrt10+sqrtphi^1/2 sqrt10+sqrtphi*^1/2 5^-1/2 G1/20^-1
5/24 := pi^1/2 sqrt2-1^1/2 sqrt3-1^1/2 2^-1/6 3^-1/2 G1/3^-1 G1/24
7/24 := pi^1/2 sqrt3-1^1/2 sqrt3-sqrt2^1/2 2^-1/4 3^-3/8 G1/4^-1 G1/24
11/24 := pi 2^1/12 sqrt2-1^1/2 sqrt3-sqrt2^1/2 3^-3/8 G1/3^-1 G1/4^-1 G1/24
13/24 := 2^2/3 3^3/8 sqrt3+1^1/2 G1/3 G1/4 G1/24^-1
17/24 := 2 pi^1/2 3^3/8 sqrt2+1^1/2 G1/4 G1/24^-1
19/24 := pi^1/2 2^11/12 3^1/2 sqrt3+sqrt2^1/2 G1/3 G1/24^-1
23/24 := pi 2^3/4 sqrt2+1^1/2 sqrt3+1^1/2 sqrt3+sqrt2^1/2 G1/24^-1
1/30 := pi^-1/2 3^9/20 phi^1/2 sqrt15+psi^1/2 2^-16/15 5^-1/6 G1/3 G1/5
7/30 := pi^-1/2 3^3/20 phi*^1/2 sqrt15+psi*^1/2 2^-22/15 5^-1/6 G1/3 G2/5
11/30 := pi^1/2 phi^1/2 sqrt15-psi^1/2 2^-11/15 3^-1/20 5^-1/3 G1/3^-1 G1/5
13/30 := pi^1/2 3^7/20 phi* sqrt15-psi*^1/2 2^-41/30 5^-2/3 G1/3 G2/5^-1
17/30 := pi^1/2 phi*^1/2 sqrt15-psi*^1/2 2^-2/15 3^-7/20 5^-1/3 G1/3^-1 G2/5
19/30 := pi^1/2 3^1/20 phi sqrt15-psi^1/2 2^-23/30 5^-2/3 G1/3 G1/5^-1
23/30 := pi^3/2 phi* sqrt15+psi*^1/2 2^-1/30 3^-3/20 5^-5/6 G1/3^-1 G2/5^-1
29/30 := pi^3/2 phi sqrt15+psi^1/2 2^-13/30 3^-9/20 5^-5/6 G1/3^-1 G1/5^-1
11/60 := pi^1/2 phi^1/2 sqrt15-psi^1/2 sqrt10-sqrtphi^1/2 2^-5/4 3^-1/2 5^-17/24 G1/3^-1 G1/60
13/60 := pi^1/2 phi*^1/2 sqrt3+1^1/2 sqrt5-sqrt3^1/2 sqrt15-psi*^1/2 2^-13/10 3^-3/20 5^-3/8 G2/5^-1 G7/60
17/60 := pi^1/2 phi*^1/2 sqrt15-psi*^1/2 sqrt10-sqrtphi*^1/2 2^-3/4 3^-1/2 5^-11/24 G1/3^-1 G7/60
19/60 := pi^1/2 phi^1/2 sqrt3-1^1/2 sqrt5-sqrt3^1/2 sqrt15-psi^1/2 2^-7/5 3^-9/20 5^-5/8 G1/5^-1 G1/60
23/60 := pi phi*^1/2 sqrt3+1^1/2 sqrt5-sqrt3^1/2 sqrt10-sqrtphi*^1/2 2^-11/20 3^-3/20 5^-7/12 G1/3^-1 G2/5^-1 G7/60
29/60 := pi phi^1/2 sqrt3-1^1/2 sqrt5-sqrt3^1/2 sqrt10-sqrtphi^1/2 2^-23/20 3^-9/20 5^-7/12 G1/3^-1 G1/5^-1 G1/60
31/60 := 3^9/20 phi^1/2 sqrt15+psi^1/2 2^-1/10 5^-1/6 G1/3 G1/5 G1/60^-1
37/60 := 3^3/20 phi*^1/2 sqrt15+psi*^1/2 2^-7/10 5^-1/6 G1/3 G2/5 G7/60^-1
41/60 := pi^1/2 2^3/20 3^9/20 phi^1/2 sqrt10+sqrtphi^1/2 5^-1/8 G1/5 G1/60^-1
43/60 := pi^1/2 3^1/2 phi*^1/2 sqrt3-1^1/2 sqrt5+sqrt3^1/2 2^-1/2 5^-7/24 G1/3 G7/60^-1
47/60 := pi^1/2 2^1/20 3^3/20 phi*^1/2 sqrt10+sqrtphi*^1/2 5^-3/8 G2/5 G7/60^-1
49/60 := pi^1/2 3^1/2 phi^1/2 sqrt3+1^1/2 sqrt5+sqrt3^1/2 5^-1/24 G1/3 G1/60^-1
53/60 := pi phi* sqrt3-1^1/2 sqrt5+sqrt3^1/2 sqrt15+psi*^1/2 sqrt10+sqrtphi*^1/2 2^-5/4 5^-3/4 G7/60^-1
59/60 := pi phi sqrt3+1^1/2 sqrt5+sqrt3^1/2 sqrt15+psi^1/2 sqrt10+sqrtphi^1/2 2^-5/4 5^-3/4 G1/60^-1
)TBL";

// Denominators n with n | 24 or n | 60 (and more than one residue class).
const std::vector<long>& closed_form_denominators() {
  static const std::vector<long> d = {2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30, 60};
  return d;
}

// All k/n in lowest terms, 0 < k/n < 1, with n | 24 or n | 60 (71 points).
std::vector<Rational> closed_form_points() {
  std::vector<Rational> pts;
  for (long n : closed_form_denominators())
    for (long k = 1; k < n; ++k)
      if (std::gcd(k, n) == 1) pts.push_back(Q(k, n));
  std::sort(pts.begin(), pts.end(), RationalLess{});
  return pts;
}

// ---------------------------------------------------------------------------
// Log-linear solver. An equation states prod_p Gamma(p)^{terms[p]} = rhs
// over unknown points p; feeding a relation substitutes already-known
// points into rhs, then forward elimination over Q settles whatever the
// pending block now determines. Raising an equation to a fractional power
// stays exact (coefficients here are 30-smooth), and positivity makes the
// even-root step unambiguous.
// ---------------------------------------------------------------------------

struct Equation {
  GammaExponents terms;
  Monomial rhs;
  std::string tag;
};

class LogLinearSolver {
 public:
  void add_known(const Rational& p, const Monomial& m) { known_.emplace(p, m); }
  bool knows(const Rational& p) const { return known_.count(p) != 0; }
  const std::map<Rational, Monomial, RationalLess>& known() const { return known_; }
  bool pending_empty() const { return pending_.empty(); }
  std::string pending_tags() const {
    std::string out;
    for (const Equation& eq : pending_) {
      if (!out.empty()) out += ", ";
      out += eq.tag;
    }
    return out;
  }

  void feed(const FunctionalRelation& rel, std::string tag,
            std::vector<Rational>* order) {
    Equation eq{rel.lhs, rel.rhs, std::move(tag)};
    substitute_known(eq);
    pending_.push_back(std::move(eq));
    settle(order);
  }

 private:
  void substitute_known(Equation& eq) const {
    for (auto it = eq.terms.begin(); it != eq.terms.end();) {
      if (auto k = known_.find(it->first); k != known_.end()) {
        eq.rhs = eq.rhs.div(k->second.pow(it->second));
        it = eq.terms.erase(it);
      } else {
        ++it;
      }
    }
  }

  // A fully-eliminated equation must be an identity. Exact equations must
  // be the literal unit; tail-carrying ones are accepted when the
  // enclosure contains 1.
  void check_identity(const Equation& eq) const {
    if (!eq.rhs.has_tail()) {
      if (!eq.rhs.is_unit())
        throw SingularSystem("inconsistent relation block at " + eq.tag);
      return;
    }
    BigBall v = eq.rhs.eval_algebraic(kExtensionTailBits);
    if (!v.sub(BigBall::from_long(1, kExtensionTailBits)).contains_zero())
      throw SingularSystem("numerically inconsistent relation block at " + eq.tag);
  }

  void substitute_point(const Rational& p, const Monomial& value) {
    for (Equation& eq : pending_) {
      auto it = eq.terms.find(p);
      if (it == eq.terms.end()) continue;
      eq.rhs = eq.rhs.div(value.pow(it->second));
      eq.terms.erase(it);
    }
  }

  // Subtract lambda times the pivot equation (divide by its rhs power).
  static void combine(Equation& target, const Equation& pivot,
                      const Rational& lambda) {
    for (const auto& [p, c] : pivot.terms) {
      Rational& slot = target.terms[p];
      slot -= lambda * c;
      if (slot == 0) target.terms.erase(p);
    }
    target.rhs = target.rhs.div(pivot.rhs.pow(lambda));
  }

  // One full forward-elimination sweep: pivot columns ascending, each
  // cleared from every non-pivot row. Pivot rows contain no earlier
  // column, so the sweep never reintroduces a cleared one.
  bool eliminate_once() {
    std::set<Rational, RationalLess> cols;
    for (const Equation& eq : pending_)
      for (const auto& [p, c] : eq.terms) cols.insert(p);
    std::vector<char> is_pivot(pending_.size(), 0);
    bool changed = false;
    for (const Rational& p : cols) {
      std::size_t piv = pending_.size();
      for (std::size_t r = 0; r < pending_.size(); ++r) {
        if (!is_pivot[r] && pending_[r].terms.count(p)) {
          piv = r;
          break;
        }
      }
      if (piv == pending_.size()) continue;
      is_pivot[piv] = 1;
      const Rational cp = pending_[piv].terms.at(p);
      for (std::size_t r = 0; r < pending_.size(); ++r) {
        if (r == piv || pending_[r].terms.count(p) == 0) continue;
        combine(pending_[r], pending_[piv], pending_[r].terms.at(p) / cp);
        changed = true;
      }
    }
    return changed;
  }

  void settle(std::vector<Rational>* order) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t i = 0; i < pending_.size();) {
        Equation& eq = pending_[i];
        if (eq.terms.empty()) {
          check_identity(eq);
          pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(i));
          progress = true;
          continue;
        }
        if (eq.terms.size() == 1) {
          const Rational p = eq.terms.begin()->first;
          const Rational e = eq.terms.begin()->second;
          const Monomial value = eq.rhs.pow(Rational(1) / e);
          known_.emplace(p, value);
          if (order) order->push_back(p);
          pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(i));
          substitute_point(p, value);
          progress = true;
          continue;
        }
        ++i;
      }
      if (!progress) progress = eliminate_once();
    }
  }

  std::map<Rational, Monomial, RationalLess> known_;
  std::vector<Equation> pending_;
};

// ---------------------------------------------------------------------------
// Relation schedules. Order 0 means a reflection step; otherwise the
// multiplication order. Each schedule pins down its unknowns with exact
// forward elimination in the stated sequence; the three four-equation
// blocks (denominators 12, 15, 20) resolve together, one of them through
// an even root fixed by positivity.
// ---------------------------------------------------------------------------

struct Step {
  long order;  // 0 = reflection
  long num, den;
};

constexpr Step kClosedFormSchedule[] = {
    {0, 1, 2},   {0, 1, 3},   {0, 1, 4},   {0, 1, 5},   {0, 2, 5},
    {2, 1, 6},   {0, 1, 6},   {2, 1, 8},   {0, 1, 8},   {0, 3, 8},
    {2, 1, 5},   {2, 1, 10},  {0, 1, 10},  {0, 3, 10},
    {3, 1, 12},  {2, 1, 12},  {0, 1, 12},  {0, 5, 12},
    {3, 1, 15},  {0, 1, 15},  {0, 4, 15},
    {5, 1, 15},  {3, 2, 15},  {0, 2, 15},  {0, 7, 15},
    {2, 1, 20},  {0, 1, 20},  {0, 9, 20},
    {5, 1, 20},  {2, 3, 20},  {0, 3, 20},  {0, 7, 20},
    {3, 1, 24},  {2, 1, 24},  {2, 5, 24},  {0, 1, 24},  {0, 5, 24},
    {0, 7, 24},  {0, 11, 24}, {2, 1, 15},  {2, 2, 15},  {2, 1, 30},
    {2, 7, 30},  {0, 1, 30},  {0, 7, 30},  {0, 11, 30}, {0, 13, 30},
    {3, 1, 60},  {3, 7, 60},  {2, 1, 60},  {2, 7, 60},  {2, 11, 60},
    {0, 13, 60}, {2, 13, 60}, {0, 1, 60},  {0, 7, 60},  {0, 11, 60},
    {0, 17, 60}, {0, 19, 60}, {0, 23, 60}, {0, 29, 60},
};

constexpr Step kExtensionSchedule40[] = {
    {2, 1, 40}, {2, 3, 40}, {2, 7, 40}, {0, 19, 40}, {5, 3, 40}, {2, 11, 40},
};

constexpr Step kExtensionSchedule120[] = {
    {3, 1, 120}, {3, 7, 120},  {3, 11, 120}, {2, 1, 120},  {2, 7, 120},
    {2, 11, 120}, {2, 31, 120}, {2, 41, 120}, {2, 47, 120}, {0, 59, 120},
    {5, 11, 120}, {3, 1, 40},   {2, 23, 120}, {2, 43, 120},
};

BigBall sin_pi_ball(const Rational& x, long bits) {
  return BigBall::pi(bits).mul_rational(x).sin();
}

// Reflection instance whose sine has no closed form here: the value
// pi/sin(pi x) is carried as pi times a certified numeric tail.
FunctionalRelation reflection_relation_numeric(const Rational& x) {
  FunctionalRelation rel;
  rel.kind = FunctionalRelation::Kind::kReflection;
  rel.argument = x;
  rel.lhs[x] += 1;
  rel.lhs[Rational(1) - x] += 1;
  rel.rhs =
      Monomial::pi_power(Rational(1)).with_tail(sin_pi_ball(x, kExtensionTailBits).inv());
  return rel;
}

std::string step_tag(const Step& s) {
  const std::string point = std::to_string(s.num) + "/" + std::to_string(s.den);
  if (s.order == 0) return "reflection(" + point + ")";
  return "multiplication_" + std::to_string(s.order) + "(" + point + ")";
}

FunctionalRelation step_relation(const Step& s) {
  const Rational x = Q(s.num, s.den);
  if (s.order != 0) return multiplication_relation(s.order, x);
  if (denominator_divides_24_or_60(x)) return reflection_relation(x);
  return reflection_relation_numeric(x);
}

// Feed reflection instances, in ascending order, for every point k/den not
// yet known; the partner 1-k/den is known by then, so each resolves.
void reflection_sweep(LogLinearSolver& solver, long den,
                      std::vector<Rational>* order) {
  for (long k = 1; k < den; ++k) {
    if (std::gcd(k, den) != 1) continue;
    const Rational p = Q(k, den);
    if (solver.knows(p)) continue;
    const Rational complement = Rational(1) - p;
    const Rational& x = p < complement ? p : complement;
    solver.feed(reflection_relation_numeric(x),
                "reflection(" + to_string(x) + ")", order);
  }
}

const std::map<Rational, Monomial, RationalLess>& extended_table() {
  static const auto* t = new std::map<Rational, Monomial, RationalLess>(extend_to_120());
  return *t;
}

}  // namespace

// ---------------------------------------------------------------------------
// Relation builders
// ---------------------------------------------------------------------------

Monomial shift_normalize(const Rational& x_raw, Rational* normalized,
                         bool* has_gamma) {
  Rational x = x_raw;
  x.canonicalize();
  if (is_integer(x)) {
    if (x <= 0) throw PoleError("Gamma has a pole at " + to_string(x));
    Rational f(1);
    for (Rational j(1); j < x; j += 1) f *= j;
    if (has_gamma) *has_gamma = false;
    return Monomial::from_rational(f);
  }
  Rational pre(1);
  Rational y = x;
  while (y > 1) {
    y -= 1;
    pre *= y;  // Gamma(y+1) = y Gamma(y)
  }
  while (y < 0) {
    pre /= y;  // Gamma(y) = Gamma(y+1)/y
    y += 1;
  }
  if (sgn(pre) < 0)
    throw NegativeValue("Gamma(" + to_string(x) +
                        ") is negative and has no positive-Monomial form");
  if (normalized) *normalized = y;
  if (has_gamma) *has_gamma = true;
  return Monomial::from_rational(pre);
}

FunctionalRelation reflection_relation(const Rational& x_raw) {
  Rational x = x_raw;
  x.canonicalize();
  if (!(x > 0 && x < 1))
    throw DomainError("reflection argument " + to_string(x) +
                      " must lie in (0, 1)");
  FunctionalRelation rel;
  rel.kind = FunctionalRelation::Kind::kReflection;
  rel.argument = x;
  rel.lhs[x] += 1;
  rel.lhs[Rational(1) - x] += 1;
  rel.rhs = Monomial::pi_power(Rational(1)).div(sin_pi_exact(x));
  return rel;
}

FunctionalRelation multiplication_relation(long n, const Rational& x_raw) {
  if (n < 2) throw DomainError("multiplication order must be at least 2");
  Rational x = x_raw;
  x.canonicalize();
  if (!(x > 0 && x < 1))
    throw DomainError("multiplication argument " + to_string(x) +
                      " must lie in (0, 1)");
  FunctionalRelation rel;
  rel.kind = FunctionalRelation::Kind::kMultiplication;
  rel.order = n;
  rel.argument = x;
  rel.rhs = Monomial::canonicalize({
      Monomial::Factor::number_power(Rational(n), Q(1, 2) - Rational(n) * x),
      Monomial::Factor::number_power(Rational(2), Q(n - 1, 2)),
      Monomial::Factor::pi_power(Q(n - 1, 2)),
  });
  for (long i = 0; i < n; ++i) {
    const Rational a = x + Q(i, n);
    Rational y;
    bool has_gamma = false;
    const Monomial pre = shift_normalize(a, &y, &has_gamma);
    rel.rhs = rel.rhs.div(pre);  // factor crosses from the gamma product
    if (has_gamma) rel.lhs[y] += 1;
  }
  const Rational b = Rational(n) * x;
  Rational y;
  bool has_gamma = false;
  const Monomial pre = shift_normalize(b, &y, &has_gamma);
  rel.rhs = rel.rhs.mul(pre);  // Gamma(nx) sits on the constant side
  if (has_gamma) rel.lhs[y] -= 1;
  erase_zero_exponents(rel.lhs);
  return rel;
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

const Monomial* ReductionTable::find(const Rational& x_raw) const {
  Rational x = x_raw;
  x.canonicalize();
  auto it = entries_.find(x);
  return it == entries_.end() ? nullptr : &it->second;
}

const ReductionTable& reduction_table() {
  static const ReductionTable* table = [] {
    std::map<Rational, Monomial, RationalLess> entries;
    std::istringstream in(kReductionTableData);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const std::size_t sep = line.find(" := ");
      if (sep == std::string::npos)
        throw Error("malformed reduction table line: " + line);
      const auto key = parse_rational(line.substr(0, sep));
      if (!key) throw Error("malformed reduction table key: " + line);
      entries.emplace(*key, parse_monomial_product(line.substr(sep + 4)));
    }
    for (const Rational& b : gamma_basis_points())
      if (denominator_divides_24_or_60(b))
        entries.emplace(b, Monomial::gamma_power(b));
    if (entries.size() != 71)
      throw Error("reduction table must hold 71 entries, found " +
                  std::to_string(entries.size()));
    return new ReductionTable(std::move(entries));
  }();
  return *table;
}

ReductionTable derive_table(std::vector<Rational>* determination_order) {
  LogLinearSolver solver;
  for (const Rational& b : gamma_basis_points())
    if (denominator_divides_24_or_60(b))
      solver.add_known(b, Monomial::gamma_power(b));
  for (const Step& s : kClosedFormSchedule)
    solver.feed(step_relation(s), step_tag(s), determination_order);
  if (!solver.pending_empty())
    throw SingularSystem("derivation schedule left unsolved blocks: " +
                         solver.pending_tags());
  std::map<Rational, Monomial, RationalLess> entries;
  for (const Rational& p : closed_form_points()) {
    auto it = solver.known().find(p);
    if (it == solver.known().end())
      throw SingularSystem("derivation schedule never determined Gamma(" +
                           to_string(p) + ")");
    entries.emplace(p, it->second);
  }
  return ReductionTable(std::move(entries));
}

std::map<Rational, Monomial, RationalLess> extend_to_120(
    std::vector<Rational>* determination_order) {
  LogLinearSolver solver;
  for (const auto& [p, m] : reduction_table().entries()) solver.add_known(p, m);
  for (const Rational& b : gamma_basis_points())
    if (!denominator_divides_24_or_60(b))
      solver.add_known(b, Monomial::gamma_power(b));

  for (const Step& s : kExtensionSchedule40)
    solver.feed(step_relation(s), step_tag(s), determination_order);
  reflection_sweep(solver, 40, determination_order);
  for (const Step& s : kExtensionSchedule120)
    solver.feed(step_relation(s), step_tag(s), determination_order);
  reflection_sweep(solver, 120, determination_order);
  if (!solver.pending_empty())
    throw SingularSystem("extension schedule left unsolved blocks: " +
                         solver.pending_tags());

  std::map<Rational, Monomial, RationalLess> entries;
  for (long den : {40L, 120L}) {
    for (long k = 1; k < den; ++k) {
      if (std::gcd(k, den) != 1) continue;
      const Rational p = Q(k, den);
      auto it = solver.known().find(p);
      if (it == solver.known().end())
        throw SingularSystem("extension schedule never determined Gamma(" +
                             to_string(p) + ")");
      entries.emplace(p, it->second);
    }
  }
  return entries;
}

// ---------------------------------------------------------------------------
// Reduction
// ---------------------------------------------------------------------------

Monomial reduce(const Rational& x_raw) {
  Rational x = x_raw;
  x.canonicalize();
  if (is_integer(x)) {
    // shift_normalize throws the PoleError for nonpositive integers.
    return shift_normalize(x, nullptr, nullptr);
  }
  if (!denominator_divides(x, 24) && !denominator_divides(x, 60) &&
      !denominator_divides(x, 120))
    throw UnsupportedDenominator(
        "unsupported denominator " + x.get_den().get_str() + " in Gamma(" +
        to_string(x) + "): it divides none of 24, 60, 120");
  Rational y;
  bool has_gamma = false;
  const Monomial pre = shift_normalize(x, &y, &has_gamma);
  if (denominator_divides_24_or_60(y)) {
    const Monomial* entry = reduction_table().find(y);
    if (!entry) throw Error("reduction table is missing " + to_string(y));
    return pre.mul(*entry);
  }
  const auto& ext = extended_table();
  auto it = ext.find(y);
  if (it == ext.end()) throw Error("extension table is missing " + to_string(y));
  return pre.mul(it->second);
}

Monomial simplify_gamma_term(
    const std::vector<std::pair<Rational, Rational>>& factors) {
  Monomial out = Monomial::one();
  for (const auto& [arg, exp] : factors) out = out.mul(reduce(arg).pow(exp));
  return out;
}

bool is_gamma_free(const Monomial& m) {
  return m.gamma_exponents().empty() && m.pi_exponent() == 0;
}

// ---------------------------------------------------------------------------
// Kubert rank
// ---------------------------------------------------------------------------

namespace {

// Multiplication-relation gamma exponents only, constants dropped; the
// recurrence fold never changes a gamma exponent, so no Monomials needed.
GammaExponents multiplication_exponents(long n, const Rational& x) {
  GammaExponents lhs;
  for (long i = 0; i < n; ++i) {
    Rational a = x + Q(i, n);
    if (is_integer(a)) continue;
    if (a > 1) a -= 1;
    lhs[a] += 1;
  }
  const Rational b = Rational(n) * x;
  if (!is_integer(b)) lhs[b - floor_rational(b)] -= 1;
  erase_zero_exponents(lhs);
  return lhs;
}

std::vector<long> divisors_of(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// Incremental exact row reduction: rows are sparse maps column -> value,
// pivots normalized to leading coefficient 1.
class SparseRowBasis {
 public:
  // Reduces the row against the basis; inserts the remainder when nonzero.
  // Returns whether the rank grew.
  bool insert(std::map<std::size_t, Rational> row) {
    while (!row.empty()) {
      const std::size_t lead = row.begin()->first;
      auto p = pivots_.find(lead);
      if (p == pivots_.end()) {
        const Rational inv = Rational(1) / row.begin()->second;
        for (auto& [c, v] : row) v *= inv;
        pivots_.emplace(lead, std::move(row));
        return true;
      }
      const Rational lambda = row.begin()->second;
      for (const auto& [c, v] : p->second) {
        Rational& slot = row[c];
        slot -= lambda * v;
        if (slot == 0) row.erase(c);
      }
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, std::map<std::size_t, Rational>> pivots_;
};

struct KubertSystem {
  std::vector<Rational> points;                       // ascending
  std::map<Rational, std::size_t, RationalLess> index;
  SparseRowBasis basis;
};

KubertSystem build_kubert_system(long N) {
  if (N < 3) throw DomainError("kubert rank needs N >= 3");
  KubertSystem sys;
  for (long m : divisors_of(N)) {
    if (m < 2) continue;
    for (long k = 1; k < m; ++k)
      if (std::gcd(k, m) == 1) sys.points.push_back(Q(k, m));
  }
  std::sort(sys.points.begin(), sys.points.end(), RationalLess{});
  for (std::size_t i = 0; i < sys.points.size(); ++i)
    sys.index.emplace(sys.points[i], i);

  for (const Rational& p : sys.points) {
    if (p > Q(1, 2)) continue;
    std::map<std::size_t, Rational> row;
    row[sys.index.at(p)] += 1;
    row[sys.index.at(Rational(1) - p)] += 1;
    sys.basis.insert(std::move(row));
  }
  for (long n : divisors_of(N)) {
    if (n < 2) continue;
    for (const Rational& x : sys.points) {
      std::map<std::size_t, Rational> row;
      for (const auto& [q, c] : multiplication_exponents(n, x))
        row[sys.index.at(q)] = c;
      if (!row.empty()) sys.basis.insert(std::move(row));
    }
  }
  return sys;
}

}  // namespace

int kubert_rank(long N) {
  KubertSystem sys = build_kubert_system(N);
  return static_cast<int>(sys.points.size() - sys.basis.rank());
}

bool kubert_independent(long N, const std::vector<Rational>& points) {
  KubertSystem sys = build_kubert_system(N);
  for (const Rational& p_raw : points) {
    Rational p = p_raw;
    p.canonicalize();
    auto it = sys.index.find(p);
    if (it == sys.index.end())
      throw DomainError("point " + to_string(p) + " is outside the system for N=" +
                        std::to_string(N));
    std::map<std::size_t, Rational> row;
    row[it->second] = 1;
    if (!sys.basis.insert(std::move(row))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------------

std::string reduction_table_json(const ReductionTable& t) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (const auto& [p, m] : t.entries())
    doc[to_string(p)] = nlohmann::ordered_json::parse(m.render_json());
  return doc.dump(2);
}

std::string reduction_table_latex(const ReductionTable& t) {
  std::string out = "\\begin{align*}\n";
  for (const auto& [p, m] : t.entries()) {
    out += "\\Gamma\\left(\\tfrac{" + p.get_num().get_str() + "}{" +
           p.get_den().get_str() + "}\\right) &= " + m.render_latex() + " \\\\\n";
  }
  out += "\\end{align*}\n";
  return out;
}

}  // namespace gammacalc
