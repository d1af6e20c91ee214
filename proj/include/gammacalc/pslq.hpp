#pragma once

#include <vector>

#include "gammacalc/bigfloat.hpp"

namespace gammacalc {

// Outcome of an integer-relation search.
struct PslqResult {
  // Nonzero integer coefficients c with sum_i c_i x_i numerically zero, in
  // input order; empty when no relation was detected.
  std::vector<long> relation;
  // Lower bound, valid at the point the search stopped, on the Euclidean
  // norm of ANY integer relation among the inputs. A bound above the
  // coefficient cap certifies that no relation with coefficients of that
  // size exists.
  double norm_bound = 0.0;
  // True when the search ended by exceeding the coefficient cap (a
  // certificate of absence), false when it ended by finding a relation or
  // by exhausting the iteration budget.
  bool exhausted_bound = false;
};

// PSLQ integer-relation search over the midpoints of `values`, all of which
// must be nonzero. Stops when it finds a relation whose coefficients are at
// most `max_coeff` in absolute value, when the norm bound proves no such
// relation exists, or after `max_steps` size-reduction rounds.
//
// Any returned relation is certified before being reported: the linear
// combination is re-evaluated in ball arithmetic and must be provably
// smaller than the detection threshold.
PslqResult pslq(const std::vector<BigBall>& values, long max_coeff,
                long max_steps = 20000);

// log of every generator constant followed by log(pi), each to
// `decimal_digits` digits: the vector probed by the independence property.
std::vector<BigBall> generator_log_vector(int decimal_digits);

}  // namespace gammacalc
