#ifndef IKLAB_SIMPLEX_HPP
#define IKLAB_SIMPLEX_HPP

#include <vector>

#include "iklab/rational.hpp"

namespace iklab::detail {

// Dense bounded-variable simplex, exact rational arithmetic, Bland's rule.
// Internal to the residual-LP solver; not a general-purpose LP interface.
//
//   maximize c'x  subject to  Ax <= b,  0 <= x_j <= u_j.
//
// b must be nonnegative (the all-lower-bounds point is the starting basis).
struct BoundedLp {
  std::vector<std::vector<Rat>> a;  // m x n
  std::vector<Rat> b;               // m
  std::vector<Rat> c;               // n
  std::vector<Rat> upper;           // n
};

struct LpResult {
  std::vector<Rat> x;
  Rat objective;
  long long pivots = 0;
};

/// Throws Error{lp_numerical_failure} when max_pivots is exceeded (Bland's
/// rule makes that unreachable short of a modelling bug).
LpResult solve_bounded_lp(const BoundedLp& lp, long long max_pivots = 100000);

}  // namespace iklab::detail

#endif  // IKLAB_SIMPLEX_HPP
