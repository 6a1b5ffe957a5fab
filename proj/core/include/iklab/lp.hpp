#ifndef IKLAB_LP_HPP
#define IKLAB_LP_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "iklab/instance.hpp"
#include "iklab/rational.hpp"

namespace iklab {

/// Fractional packing over the parent instance: x[i][t] in [0,1],
/// nondecreasing in t, capacity-feasible in every period.
struct FractionalSolution {
  std::vector<std::vector<Rat>> x;  // [item][period]
  Rat objective;
  std::vector<Rat> used_capacity;  // per period
};

/// IKP restricted to a surviving item subset with reduced capacities and
/// per-item earliest insertion times.
struct ResidualInstance {
  Instance parent;
  std::vector<Rat> residual_capacities;  // size T, nondecreasing, <= parent capacities
  std::vector<int> survivors;            // parent item ids, ascending
  std::vector<int> earliest;             // 0-based earliest start, aligned with survivors
};

/// Checks ResidualInstance invariants (monotone c^R <= c, every survivor fits
/// at its earliest time). Throws Error on violation.
ResidualInstance validate_residual(ResidualInstance res);

/// Canonical embedding of a plain instance: every item survives with
/// t_j = min{t | c_t >= w_j}; items that never fit are dropped.
ResidualInstance full_residual(const Instance& inst);

/// LP relaxation via one efficiency sort plus a monotone per-period scan.
FractionalSolution lp_relax_baseline(const Instance& inst);

struct FastLpStats {
  // Sum of subset sizes processed while materializing partition-tree nodes;
  // each subset is partitioned around its efficiency median exactly once.
  std::int64_t node_visits = 0;
};

/// Same solution as lp_relax_baseline, computed with a lazily materialized
/// median partition tree shared across the T capacities.
FractionalSolution lp_relax_fast(const Instance& inst, FastLpStats* stats = nullptr);

/// Optimal LP value of the residual problem (capacity, precedence and
/// earliest-insertion constraints), solved by a bounded-variable simplex in
/// exact rational arithmetic, then post-processed so that at most T items
/// keep fractional entries. Throws Error{lp_numerical_failure} if the pivot
/// limit is hit.
FractionalSolution lp_relax_residual(const ResidualInstance& res);

/// One pass of profit-preserving weight shifts: for t = 1..T, while two items
/// first appear with fractional value in period t, move weight from the least
/// efficient onto the most efficient one. Leaves at most one new fractional
/// item per period; the objective never decreases.
void apply_fractionality_exchanges(const Instance& inst, FractionalSolution& sol);

/// Number of items with any fractional entry.
int count_fractional_items(const FractionalSolution& sol);

/// Keeps exactly the entries equal to 1: start_i = first period with x = 1.
/// Returns the schedule and its exact objective value.
std::pair<Schedule, Rat> round_down(const Instance& inst, const FractionalSolution& sol);

}  // namespace iklab

#endif  // IKLAB_LP_HPP
