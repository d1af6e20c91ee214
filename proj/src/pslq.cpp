#include "gammacalc/pslq.hpp"

#include <gmpxx.h>
#include <mpfr.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "gammacalc/atoms.hpp"
#include "gammacalc/errors.hpp"
#include "gammacalc/monomial.hpp"

namespace gammacalc {

namespace {

// Plain arbitrary-precision float for the lattice reduction itself; the
// search is heuristic and its output is certified afterwards in ball
// arithmetic, so no radius tracking is needed here.
class Real {
 public:
  explicit Real(long prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real& operator=(const Real& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

using Matrix = std::vector<std::vector<Real>>;

// round(a/b) as an exact integer.
mpz_class rounded_quotient(const Real& a, const Real& b, long prec) {
  Real q(prec);
  mpfr_div(q.get(), a.get(), b.get(), MPFR_RNDN);
  mpfr_rint(q.get(), q.get(), MPFR_RNDN);
  mpz_class t;
  mpfr_get_z(t.get_mpz_t(), q.get(), MPFR_RNDN);
  return t;
}

void submul_z(Real& target, const mpz_class& t, const Real& src, long prec) {
  Real tmp(prec);
  mpfr_mul_z(tmp.get(), src.get(), t.get_mpz_t(), MPFR_RNDN);
  mpfr_sub(target.get(), target.get(), tmp.get(), MPFR_RNDN);
}

}  // namespace

PslqResult pslq(const std::vector<BigBall>& values, long max_coeff,
                long max_steps) {
  const size_t n = values.size();
  if (n < 2) throw DomainError("integer-relation search needs >= 2 inputs");
  const long prec = values.front().precision();
  for (const BigBall& v : values)
    if (v.contains_zero())
      throw DomainError("integer-relation inputs must be nonzero");

  // Detection threshold: well above the input accuracy floor but far below
  // anything a miss could produce.
  Real tol(prec);
  mpfr_set_ui_2exp(tol.get(), 1, -(3 * prec / 4), MPFR_RNDN);

  // y = inputs scaled to unit Euclidean norm; s_k the scaled tail norms.
  std::vector<Real> y(n, Real(prec));
  std::vector<Real> s(n, Real(prec));
  {
    Real acc(prec);
    for (size_t k = n; k-- > 0;) {
      Real sq(prec);
      mpfr_sqr(sq.get(), values[k].midpoint(), MPFR_RNDN);
      mpfr_add(acc.get(), acc.get(), sq.get(), MPFR_RNDN);
      mpfr_sqrt(s[k].get(), acc.get(), MPFR_RNDN);
    }
    const Real norm = s[0];
    for (size_t k = 0; k < n; ++k) {
      mpfr_div(y[k].get(), values[k].midpoint(), norm.get(), MPFR_RNDN);
      mpfr_div(s[k].get(), s[k].get(), norm.get(), MPFR_RNDN);
    }
  }

  // H: n x (n-1) lower trapezoidal basis of the orthogonal complement.
  Matrix h(n, std::vector<Real>(n - 1, Real(prec)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n - 1; ++j) {
      if (i < j) continue;
      if (i == j) {
        mpfr_div(h[i][j].get(), s[j + 1].get(), s[j].get(), MPFR_RNDN);
      } else {
        Real t(prec);
        mpfr_mul(t.get(), y[i].get(), y[j].get(), MPFR_RNDN);
        Real d(prec);
        mpfr_mul(d.get(), s[j].get(), s[j + 1].get(), MPFR_RNDN);
        mpfr_div(h[i][j].get(), t.get(), d.get(), MPFR_RNDN);
        mpfr_neg(h[i][j].get(), h[i][j].get(), MPFR_RNDN);
      }
    }
  }

  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n, 0));
  std::vector<std::vector<mpz_class>> b(n, std::vector<mpz_class>(n, 0));
  for (size_t i = 0; i < n; ++i) a[i][i] = b[i][i] = 1;

  auto size_reduce = [&](size_t i, size_t j) {
    const mpz_class t = rounded_quotient(h[i][j], h[j][j], prec);
    if (t == 0) return;
    Real ty(prec);
    mpfr_mul_z(ty.get(), y[i].get(), t.get_mpz_t(), MPFR_RNDN);
    mpfr_add(y[j].get(), y[j].get(), ty.get(), MPFR_RNDN);
    for (size_t k = 0; k <= j; ++k) submul_z(h[i][k], t, h[j][k], prec);
    for (size_t k = 0; k < n; ++k) {
      a[i][k] -= t * a[j][k];
      b[k][j] += t * b[k][i];
    }
  };

  for (size_t i = 1; i < n; ++i)
    for (size_t j = i; j-- > 0;) size_reduce(i, j);

  // gamma^i weights for the pivot choice, gamma = sqrt(4/3).
  Real gamma(prec);
  mpfr_set_ui(gamma.get(), 4, MPFR_RNDN);
  mpfr_div_ui(gamma.get(), gamma.get(), 3, MPFR_RNDN);
  mpfr_sqrt(gamma.get(), gamma.get(), MPFR_RNDN);

  PslqResult result;
  const double cap = static_cast<double>(max_coeff);

  auto certify = [&](const std::vector<long>& rel) {
    BigBall combo(prec);
    bool started = false;
    for (size_t k = 0; k < n; ++k) {
      if (rel[k] == 0) continue;
      const BigBall part = values[k].mul_rational(make_rational(rel[k]));
      combo = started ? combo.add(part) : part;
      started = true;
    }
    if (!started) return false;
    Real bound(prec);
    mpfr_abs(bound.get(), combo.midpoint(), MPFR_RNDU);
    mpfr_add(bound.get(), bound.get(), combo.radius(), MPFR_RNDU);
    Real threshold(prec);
    mpfr_set_ui_2exp(threshold.get(), 1, -(7 * prec) / 8, MPFR_RNDN);
    return mpfr_cmp(bound.get(), threshold.get()) < 0;
  };

  for (long step = 0; step < max_steps; ++step) {
    // Pivot: largest gamma^i |H[i][i]|.
    size_t m = 0;
    {
      Real best(prec), weight(prec);
      mpfr_set(weight.get(), gamma.get(), MPFR_RNDN);
      mpfr_set_si(best.get(), -1, MPFR_RNDN);
      for (size_t i = 0; i + 1 < n; ++i) {
        Real cand(prec);
        mpfr_abs(cand.get(), h[i][i].get(), MPFR_RNDN);
        mpfr_mul(cand.get(), cand.get(), weight.get(), MPFR_RNDN);
        if (mpfr_cmp(cand.get(), best.get()) > 0) {
          best = cand;
          m = i;
        }
        mpfr_mul(weight.get(), weight.get(), gamma.get(), MPFR_RNDN);
      }
    }

    std::swap(y[m], y[m + 1]);
    std::swap(h[m], h[m + 1]);
    std::swap(a[m], a[m + 1]);
    for (size_t k = 0; k < n; ++k) std::swap(b[k][m], b[k][m + 1]);

    if (m + 2 < n) {
      // Rotate the 2x2 corner back to lower-trapezoidal form.
      Real t0(prec);
      mpfr_hypot(t0.get(), h[m][m].get(), h[m][m + 1].get(), MPFR_RNDN);
      if (!mpfr_zero_p(t0.get())) {
        Real t1(prec), t2(prec);
        mpfr_div(t1.get(), h[m][m].get(), t0.get(), MPFR_RNDN);
        mpfr_div(t2.get(), h[m][m + 1].get(), t0.get(), MPFR_RNDN);
        for (size_t i = m; i < n; ++i) {
          Real t3 = h[i][m];
          Real t4 = h[i][m + 1];
          Real u(prec), w(prec);
          mpfr_mul(u.get(), t1.get(), t3.get(), MPFR_RNDN);
          mpfr_mul(w.get(), t2.get(), t4.get(), MPFR_RNDN);
          mpfr_add(h[i][m].get(), u.get(), w.get(), MPFR_RNDN);
          mpfr_mul(u.get(), t2.get(), t3.get(), MPFR_RNDN);
          mpfr_mul(w.get(), t1.get(), t4.get(), MPFR_RNDN);
          mpfr_sub(h[i][m + 1].get(), w.get(), u.get(), MPFR_RNDN);
        }
      }
    }

    for (size_t i = m + 1; i < n; ++i) {
      const size_t hi = std::min(i - 1, m + 1);
      for (size_t j = hi + 1; j-- > 0;) size_reduce(i, j);
    }

    // Norm bound: any relation has Euclidean norm >= 1/max_i |H[i][i]|.
    {
      Real hmax(prec);
      for (size_t i = 0; i + 1 < n; ++i) {
        Real c(prec);
        mpfr_abs(c.get(), h[i][i].get(), MPFR_RNDN);
        if (mpfr_cmp(c.get(), hmax.get()) > 0) hmax = c;
      }
      if (!mpfr_zero_p(hmax.get()))
        result.norm_bound = 1.0 / mpfr_get_d(hmax.get(), MPFR_RNDU);
    }

    // Relation check: a vanished y component exposes a B column.
    size_t best_idx = 0;
    Real best_y(prec);
    mpfr_set_inf(best_y.get(), 1);
    for (size_t i = 0; i < n; ++i) {
      Real ay(prec);
      mpfr_abs(ay.get(), y[i].get(), MPFR_RNDN);
      if (mpfr_cmp(ay.get(), best_y.get()) < 0) {
        best_y = ay;
        best_idx = i;
      }
    }
    if (mpfr_cmp(best_y.get(), tol.get()) < 0) {
      std::vector<long> rel(n, 0);
      bool fits = true;
      for (size_t k = 0; k < n && fits; ++k) {
        if (!b[k][best_idx].fits_slong_p()) {
          fits = false;
          break;
        }
        rel[k] = b[k][best_idx].get_si();
        if (std::abs(rel[k]) > max_coeff) fits = false;
      }
      if (fits && certify(rel)) {
        result.relation = rel;
        return result;
      }
      // An uncertifiable or oversized candidate means precision is spent.
      result.exhausted_bound = false;
      return result;
    }

    if (result.norm_bound > cap) {
      result.exhausted_bound = true;
      return result;
    }
  }
  return result;
}

std::vector<BigBall> generator_log_vector(int decimal_digits) {
  const long bits =
      static_cast<long>((decimal_digits + 10) * 3.3219280948873623) + 16;
  std::vector<BigBall> logs;
  logs.reserve(kGeneratorCount + 1);
  for (int i = 0; i < kGeneratorCount; ++i) {
    const Monomial g = Monomial::from_atom(static_cast<Atom>(i));
    logs.push_back(g.eval_algebraic(bits).log());
  }
  logs.push_back(BigBall::pi(bits).log());
  return logs;
}

}  // namespace gammacalc
