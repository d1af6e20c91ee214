#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gammacalc/monomial.hpp"
#include "gammacalc/rational.hpp"

namespace gammacalc {

// One instance of a standard gamma functional equation in log-linear form:
//
//   prod_p Gamma(p)^{lhs[p]} = rhs
//
// with every argument p in (0,1) and rhs free of gamma symbols. The three
// kinds are the reflection formula Gamma(x)Gamma(1-x) = pi/sin(pi x), the
// order-n multiplication formula
//   prod_{i<n} Gamma(x+i/n) = n^{1/2-nx} (2pi)^{(n-1)/2} Gamma(nx),
// and the recurrence Gamma(x+1) = x Gamma(x). Arguments outside (0,1) are
// folded into it with the recurrence before storage (integer arguments
// become exact factorials in rhs), so a stored kShift relation is already
// trivial; the fold itself is exposed as shift_normalize below.
struct FunctionalRelation {
  enum class Kind { kReflection, kMultiplication, kShift };

  Kind kind = Kind::kReflection;
  long order = 0;   // n for kMultiplication, 0 otherwise
  Rational argument;  // the defining x

  std::map<Rational, Rational, RationalLess> lhs;
  Monomial rhs;
};

// Reflection instance at x. Requires 0 < x < 1 with denominator dividing
// 24 or 60 (the exact-sine domain).
FunctionalRelation reflection_relation(const Rational& x);

// Multiplication instance of order n >= 2 at x, 0 < x < 1. Arguments
// x + i/n that land on or beyond 1 are recurrence-folded; the rational
// prefactors join rhs. The rhs constant n^{1/2-nx} stays exact whenever n
// is 5-smooth (all n arising from the supported denominators are).
FunctionalRelation multiplication_relation(long n, const Rational& x);

// The recurrence fold: writes Gamma(x) = prefactor * Gamma(y) with
// y in (0,1), returning the prefactor and storing y in *normalized.
// For positive integer x the result is the full factorial value and
// *normalized is left untouched (there is no gamma factor left).
// Throws PoleError for nonpositive integers and NegativeValue when
// Gamma(x) < 0 (negative reals are not representable as Monomials).
Monomial shift_normalize(const Rational& x, Rational* normalized,
                         bool* has_gamma);

// The closed-form reduction map: every Gamma(k/n) with n | 24 or n | 60,
// 0 < k/n < 1, expressed over the ten-point gamma basis. Basis points map
// to themselves. Keyed by the argument in lowest terms; 71 entries.
class ReductionTable {
 public:
  ReductionTable() = default;
  explicit ReductionTable(std::map<Rational, Monomial, RationalLess> entries)
      : entries_(std::move(entries)) {}

  const std::map<Rational, Monomial, RationalLess>& entries() const {
    return entries_;
  }
  // nullptr when x (in lowest terms) has no entry.
  const Monomial* find(const Rational& x) const;

  bool operator==(const ReductionTable& o) const { return entries_ == o.entries_; }
  bool operator!=(const ReductionTable& o) const { return !(*this == o); }

 private:
  std::map<Rational, Monomial, RationalLess> entries_;
};

// The hardcoded reduction table (embedded data, parsed once and cached).
// This is the source of truth used by reduce().
const ReductionTable& reduction_table();

// Re-derives the whole table from scratch: seeds the ten basis points and
// replays a fixed schedule of reflection and multiplication instances,
// eliminating unknowns exactly over Q (log-linear Gaussian elimination;
// fractional powers of equations stay exact and positivity picks the
// square root). The result must equal reduction_table() entrywise; tests
// enforce that. If determination_order is non-null it receives the
// non-basis points in the order the schedule pins them down.
// Throws SingularSystem if the schedule fails to determine every point.
ReductionTable derive_table(std::vector<Rational>* determination_order = nullptr);

// Extends the reduction to denominators 40 and 120: six further basis
// symbols enter, and the sine values needed by reflection steps at these
// denominators have no closed form here, so entries may carry a certified
// numeric tail (balls computed at >= 60 digits). Returns the 48 entries
// with denominator exactly 40 or 120; if determination_order is non-null
// it receives the points in derivation order (the sequence-determined
// points first, then each reflection sweep in ascending order).
std::map<Rational, Monomial, RationalLess> extend_to_120(
    std::vector<Rational>* determination_order = nullptr);

// Gamma(x) expressed over the sixteen-symbol basis. Exact Monomial when
// the lowest-terms denominator divides 24 or 60; possibly tail-carrying
// when it divides 120 only; integer arguments give exact factorials.
// Arguments outside (0,1) are recurrence-folded first. Throws PoleError
// at 0, -1, -2, ...; NegativeValue when Gamma(x) < 0; and
// UnsupportedDenominator for any other denominator.
Monomial reduce(const Rational& x);

// prod_i reduce(argument_i)^{exponent_i}, canonicalized.
Monomial simplify_gamma_term(
    const std::vector<std::pair<Rational, Rational>>& factors);

// True iff m carries no gamma symbol and no power of pi — i.e. m is
// manifestly algebraic (a rational times surd powers, plus any numeric
// tail). Stricter than Monomial::is_gamma_free(), which ignores pi.
bool is_gamma_free(const Monomial& m);

// Corank over Q of the full system of reflection and multiplication
// relations on the points {k/m : m | N, m >= 2, 0 < k/m < 1, gcd(k,m)=1}:
// relations are generated for every such point and every order n | N,
// n >= 2, constants projected out, and the exponent matrix reduced
// exactly. The corank equals phi(N)/2 for every supported N. N >= 3.
int kubert_rank(long N);

// Whether the images of the given points are linearly independent modulo
// the relation space used by kubert_rank(N). Each point must lie in the
// point set for N.
bool kubert_independent(long N, const std::vector<Rational>& points);

// One JSON document mapping "k/n" to the Monomial JSON encoding.
std::string reduction_table_json(const ReductionTable& t);

// A LaTeX align* dump of the table, one formula per line.
std::string reduction_table_latex(const ReductionTable& t);

}  // namespace gammacalc
