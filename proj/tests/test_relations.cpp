#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gammacalc/errors.hpp"
#include "gammacalc/monomial.hpp"
#include "gammacalc/numeric.hpp"
#include "gammacalc/relations.hpp"
#include "gammacalc/trig.hpp"

using namespace gammacalc;

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

long euler_phi(long n) {
  long count = 0;
  for (long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

// All k/n in lowest terms in (0,1) with n dividing 24 or 60.
std::vector<Rational> supported_points() {
  std::vector<Rational> pts;
  for (long n : {2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30, 60})
    for (long k = 1; k < n; ++k)
      if (std::gcd(k, n) == 1) pts.push_back(Q(k, n));
  std::sort(pts.begin(), pts.end(), RationalLess{});
  return pts;
}

BigBall gamma_callback(const Rational& arg, long bits) {
  return gamma_numeric_bits(arg, bits);
}

// |value(m)/Gamma(x) - 1| including the radius, as a double.
double relative_gamma_deviation(const Monomial& m, const Rational& x, long bits) {
  const BigBall lhs = m.eval(bits, gamma_callback);
  const BigBall rhs = gamma_numeric_bits(x, bits);
  const BigBall dev = lhs.div(rhs).sub(BigBall::from_long(1, bits)).abs();
  return dev.mid_double() + dev.rad_double();
}

Monomial parse(const char* text) { return parse_monomial_product(text); }

}  // namespace

TEST_CASE("reflection relations carry pi over the exact sine") {
  const FunctionalRelation rel = reflection_relation(Q(1, 3));
  CHECK(rel.kind == FunctionalRelation::Kind::kReflection);
  REQUIRE(rel.lhs.size() == 2);
  CHECK(rel.lhs.at(Q(1, 3)) == 1);
  CHECK(rel.lhs.at(Q(2, 3)) == 1);
  CHECK(rel.rhs == Monomial::pi_power(Q(1)).div(sin_pi_exact(Q(1, 3))));
  CHECK(rel.rhs.is_gamma_free());

  // The self-reflecting point folds into a single squared entry.
  const FunctionalRelation half = reflection_relation(Q(1, 2));
  REQUIRE(half.lhs.size() == 1);
  CHECK(half.lhs.at(Q(1, 2)) == 2);
  CHECK(half.rhs == Monomial::pi_power(Q(1)));

  CHECK_THROWS_AS(reflection_relation(Q(0)), DomainError);
  CHECK_THROWS_AS(reflection_relation(Q(3, 2)), DomainError);
  CHECK_THROWS_AS(reflection_relation(Q(1, 7)), UnsupportedDenominator);
}

TEST_CASE("multiplication relations fold arguments into (0,1)") {
  const FunctionalRelation rel = multiplication_relation(2, Q(1, 6));
  CHECK(rel.kind == FunctionalRelation::Kind::kMultiplication);
  CHECK(rel.order == 2);
  REQUIRE(rel.lhs.size() == 3);
  CHECK(rel.lhs.at(Q(1, 6)) == 1);
  CHECK(rel.lhs.at(Q(2, 3)) == 1);
  CHECK(rel.lhs.at(Q(1, 3)) == -1);
  CHECK(rel.rhs == parse("2^2/3 pi^1/2"));

  // An argument beyond 1 and a shifted product point both recurrence-fold:
  // the pair (3/4, 5/4) becomes {3/4, 1/4} against Gamma(3/2).
  const FunctionalRelation folded = multiplication_relation(2, Q(3, 4));
  REQUIRE(folded.lhs.size() == 3);
  CHECK(folded.lhs.at(Q(3, 4)) == 1);
  CHECK(folded.lhs.at(Q(1, 4)) == 1);
  CHECK(folded.lhs.at(Q(1, 2)) == -1);
  CHECK(folded.rhs == parse("2^1/2 pi^1/2"));

  CHECK_THROWS_AS(multiplication_relation(1, Q(1, 3)), DomainError);
  CHECK_THROWS_AS(multiplication_relation(2, Q(-1, 4)), DomainError);
}

TEST_CASE("recurrence folding produces exact rational prefactors") {
  Rational y;
  bool has_gamma = false;

  CHECK(shift_normalize(Q(7, 3), &y, &has_gamma) ==
        Monomial::from_rational(Q(4, 9)));
  CHECK(has_gamma);
  CHECK(y == Q(1, 3));

  CHECK(shift_normalize(Q(5), &y, &has_gamma) == Monomial::from_rational(Q(24)));
  CHECK_FALSE(has_gamma);

  CHECK(shift_normalize(Q(-3, 2), &y, &has_gamma) ==
        Monomial::from_rational(Q(4, 3)));
  CHECK(y == Q(1, 2));

  CHECK_THROWS_AS(shift_normalize(Q(0), nullptr, nullptr), PoleError);
  CHECK_THROWS_AS(shift_normalize(Q(-4), nullptr, nullptr), PoleError);
  // Gamma is negative between consecutive nonpositive even/odd poles.
  CHECK_THROWS_AS(shift_normalize(Q(-1, 2), &y, &has_gamma), NegativeValue);
  CHECK_THROWS_AS(shift_normalize(Q(-5, 2), &y, &has_gamma), NegativeValue);
}

TEST_CASE("reduce matches the documented closed forms") {
  CHECK(reduce(Q(1, 2)) == parse("pi^1/2"));
  CHECK(reduce(Q(2, 3)) == parse("2 pi 3^-1/2 G1/3^-1"));
  CHECK(reduce(Q(1, 4)) == Monomial::gamma_power(Q(1, 4)));
  CHECK(reduce(Q(7, 3)) == Monomial::gamma_power(Q(1, 3)).mul_rational(Q(4, 9)));
  CHECK(reduce(Q(23, 24)) ==
        parse("pi 2^3/4 sqrt2+1^1/2 sqrt3+1^1/2 sqrt3+sqrt2^1/2 G1/24^-1"));
  CHECK(reduce(Q(3, 10)) == parse("pi^1/2 phi* 2^-3/5 5^-1/2 G1/5 G2/5^-1"));

  // Integer arguments give exact factorials, negatives fold when positive.
  CHECK(reduce(Q(1)) == Monomial::one());
  CHECK(reduce(Q(5)) == Monomial::from_rational(Q(24)));
  CHECK(reduce(Q(-3, 2)) == parse("pi^1/2").mul_rational(Q(4, 3)));

  CHECK_THROWS_AS(reduce(Q(0)), PoleError);
  CHECK_THROWS_AS(reduce(Q(-7)), PoleError);
  CHECK_THROWS_AS(reduce(Q(1, 7)), UnsupportedDenominator);
  CHECK_THROWS_AS(reduce(Q(-7, 9)), UnsupportedDenominator);
  CHECK_THROWS_AS(reduce(Q(-1, 2)), NegativeValue);
}

TEST_CASE("reduction table covers the whole closed-form family") {
  const ReductionTable& table = reduction_table();
  const std::vector<Rational> pts = supported_points();
  CHECK(pts.size() == 71);
  CHECK(table.entries().size() == 71);
  for (const Rational& p : pts) {
    const Monomial* m = table.find(p);
    REQUIRE(m != nullptr);
    CHECK_FALSE(m->has_tail());
  }
  for (const Rational& b : gamma_basis_points()) {
    if (!denominator_divides_24_or_60(b)) continue;
    const Monomial* m = table.find(b);
    REQUIRE(m != nullptr);
    CHECK(*m == Monomial::gamma_power(b));
  }
  CHECK(table.find(Q(1, 7)) == nullptr);
}

TEST_CASE("every table entry satisfies the reflection identity exactly") {
  for (const Rational& p : supported_points()) {
    const Monomial lhs = reduce(p).mul(reduce(Rational(1) - p));
    const Monomial rhs = Monomial::pi_power(Q(1)).div(sin_pi_exact(p));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("multiplication identities hold after reduce substitution") {
  long checked = 0;
  for (long n : {2, 3, 4, 5, 6}) {
    for (const Rational& x : supported_points()) {
      const FunctionalRelation rel = multiplication_relation(n, x);
      const bool in_domain = std::all_of(
          rel.lhs.begin(), rel.lhs.end(),
          [](const auto& kv) { return denominator_divides_24_or_60(kv.first); });
      if (!in_domain) continue;
      Monomial lhs = Monomial::one();
      for (const auto& [p, e] : rel.lhs) lhs = lhs.mul(reduce(p).pow(e));
      CHECK(lhs == rel.rhs);
      ++checked;
    }
  }
  // n in {2,3,4,6} applies to all 71 points, n=5 to the 60-part only.
  CHECK(checked == 4 * 71 + 59);
}

TEST_CASE("every table entry matches the numeric gamma oracle") {
  const long bits = PrecisionConfig{50, 10}.working_bits();
  for (const auto& [p, m] : reduction_table().entries()) {
    CHECK(relative_gamma_deviation(m, p, bits) < 1e-45);
  }
}

TEST_CASE("derivation schedule rebuilds the table from the basis") {
  std::vector<Rational> order;
  const ReductionTable derived = derive_table(&order);

  CHECK(derived == reduction_table());

  REQUIRE(order.size() == 61);
  const std::vector<Rational> first14 = {
      Q(1, 2), Q(2, 3), Q(3, 4), Q(4, 5),  Q(3, 5),  Q(1, 6),  Q(5, 6),
      Q(5, 8), Q(7, 8), Q(3, 8), Q(7, 10), Q(1, 10), Q(9, 10), Q(3, 10)};
  for (std::size_t i = 0; i < first14.size(); ++i) CHECK(order[i] == first14[i]);

  // Exactly the non-basis points get determined, each exactly once.
  std::set<Rational, RationalLess> seen(order.begin(), order.end());
  CHECK(seen.size() == order.size());
  for (const Rational& p : supported_points())
    CHECK(seen.count(p) == (is_gamma_basis_point(p) ? 0u : 1u));
}

TEST_CASE("extension closes the denominator 40 and 120 families") {
  std::vector<Rational> order;
  const auto ext = extend_to_120(&order);

  CHECK(ext.size() == 48);
  for (long den : {40L, 120L})
    for (long k = 1; k < den; ++k)
      if (std::gcd(k, den) == 1) CHECK(ext.count(Q(k, den)) == 1);

  // The six sequence-determined denominator-40 points, in order.
  const std::vector<Rational> forty = {Q(21, 40), Q(23, 40), Q(27, 40),
                                       Q(19, 40), Q(11, 40), Q(31, 40)};
  REQUIRE(order.size() == 48 - 6);  // 42 non-basis points overall
  for (std::size_t i = 0; i < forty.size(); ++i) CHECK(order[i] == forty[i]);

  // After the first reflection sweep (7 points), the fourteen
  // sequence-determined denominator-120 points, in order.
  const std::vector<Rational> one20 = {
      Q(41, 120), Q(47, 120), Q(91, 120),  Q(61, 120),  Q(67, 120),
      Q(71, 120), Q(31, 120), Q(101, 120), Q(107, 120), Q(59, 120),
      Q(83, 120), Q(43, 120), Q(23, 120),  Q(103, 120)};
  REQUIRE(order.size() >= 13 + one20.size());
  for (std::size_t i = 0; i < one20.size(); ++i)
    CHECK(order[13 + i] == one20[i]);

  // Entries whose derivation chain only passes through multiplication
  // steps stay exact; once a sine at these denominators enters (directly
  // or through a substituted value) the certified tail propagates.
  CHECK_FALSE(ext.at(Q(21, 40)).has_tail());
  CHECK_FALSE(ext.at(Q(23, 40)).has_tail());
  CHECK_FALSE(ext.at(Q(27, 40)).has_tail());
  CHECK(ext.at(Q(19, 40)).has_tail());
  CHECK(ext.at(Q(31, 40)).has_tail());  // via 11/40, which rests on 19/40
  CHECK(ext.at(Q(39, 40)).has_tail());
  CHECK(ext.at(Q(59, 120)).has_tail());
}

TEST_CASE("extension entries match the numeric gamma oracle") {
  const long bits = PrecisionConfig{60, 10}.working_bits();
  const auto ext = extend_to_120();
  CHECK(relative_gamma_deviation(ext.at(Q(21, 40)), Q(21, 40), bits) < 1e-45);
  for (const Rational& p : {Q(19, 40), Q(9, 40), Q(39, 40), Q(41, 120),
                            Q(59, 120), Q(113, 120), Q(43, 120)}) {
    CHECK(relative_gamma_deviation(ext.at(p), p, bits) < 1e-45);
  }
}

TEST_CASE("reduce reaches the extension tier through the recurrence") {
  const auto ext = extend_to_120();
  CHECK(reduce(Q(9, 40)) == ext.at(Q(9, 40)));
  // 49/40 = 9/40 + 1 picks up the exact prefactor 9/40.
  CHECK(reduce(Q(49, 40)) == ext.at(Q(9, 40)).mul_rational(Q(9, 40)));
  CHECK(reduce(Q(1, 120)) == Monomial::gamma_power(Q(1, 120)));
}

TEST_CASE("gamma terms simplify through the table") {
  CHECK(simplify_gamma_term({}) == Monomial::one());
  CHECK(simplify_gamma_term({{Q(1, 3), Q(1)}, {Q(2, 3), Q(1)}}) ==
        parse("2 pi 3^-1/2"));

  const Monomial algebraic = simplify_gamma_term(
      {{Q(1, 2), Q(1)}, {Q(2, 3), Q(1)}, {Q(3, 4), Q(-1)}, {Q(5, 12), Q(-1)}});
  CHECK(algebraic == parse("sqrt3+1^1/2 2^-1/4 3^-3/8"));
  CHECK(is_gamma_free(algebraic));

  CHECK(is_gamma_free(Monomial::one()));
  CHECK_FALSE(is_gamma_free(reduce(Q(2, 3))));
  // Unlike the member predicate, a bare power of pi does not count as free.
  CHECK_FALSE(is_gamma_free(Monomial::pi_power(Q(1))));
  CHECK(Monomial::pi_power(Q(1)).is_gamma_free());
}

TEST_CASE("relation corank equals half of Euler phi") {
  for (long N : {3L, 4L, 5L, 8L, 12L, 15L, 20L, 24L, 30L, 40L, 60L, 120L}) {
    CAPTURE(N);
    CHECK(kubert_rank(N) == euler_phi(N) / 2);
  }
}

TEST_CASE("the declared basis points stay free in the relation quotient") {
  std::vector<Rational> basis60;
  for (const Rational& b : gamma_basis_points())
    if (denominator_divides(b, 60)) basis60.push_back(b);
  CHECK(basis60.size() == 8);
  CHECK(kubert_independent(60, basis60));

  CHECK(kubert_independent(120, gamma_basis_points()));
}

TEST_CASE("coprime residues below one half are not a free set") {
  for (long N : {20L, 24L, 30L, 60L}) {
    CAPTURE(N);
    std::vector<Rational> candidate;
    for (long k = 1; 2 * k < N; ++k)
      if (std::gcd(k, N) == 1) candidate.push_back(Q(k, N));
    CHECK(candidate.size() == static_cast<std::size_t>(euler_phi(N) / 2));
    CHECK_FALSE(kubert_independent(N, candidate));
  }
}

TEST_CASE("table exports to a JSON document and a LaTeX list") {
  const ReductionTable& table = reduction_table();

  const nlohmann::json doc = nlohmann::json::parse(reduction_table_json(table));
  CHECK(doc.size() == 71);
  CHECK(doc.contains("1/2"));
  CHECK(doc["23/24"] == nlohmann::json::parse(reduce(Q(23, 24)).render_json()));
  CHECK(Monomial::parse_json(doc["3/10"].dump()) == reduce(Q(3, 10)));

  const std::string latex = reduction_table_latex(table);
  CHECK(latex.find("\\begin{align*}") != std::string::npos);
  CHECK(latex.find("\\end{align*}") != std::string::npos);
  CHECK(latex.find("\\Gamma\\left(\\tfrac{1}{2}\\right) &= ") != std::string::npos);
  CHECK(std::count(latex.begin(), latex.end(), '&') == 71);
}
