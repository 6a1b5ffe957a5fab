#ifndef IKLAB_INSTANCE_HPP
#define IKLAB_INSTANCE_HPP

#include <string>
#include <vector>

#include "iklab/rational.hpp"

namespace iklab {

/// An incremental knapsack instance: n items, T periods, capacities
/// nondecreasing over periods, positive per-period time multipliers.
/// Immutable after validation; safe to share read-only across threads.
struct Instance {
  std::vector<Rat> profits;      // p_i > 0, size n
  std::vector<Rat> weights;      // w_i > 0, size n
  std::vector<Rat> capacities;   // c_t, nondecreasing, size T
  std::vector<Rat> multipliers;  // delta_t > 0, size T

  int num_items() const { return static_cast<int>(profits.size()); }
  int num_periods() const { return static_cast<int>(capacities.size()); }
};

/// Item never enters the knapsack.
inline constexpr int kNever = -1;

/// A feasible solution: per-item start period (0-based) or kNever. Once an
/// item starts it stays packed through the last period.
struct Schedule {
  std::vector<int> start;
};

struct RatioReport {
  std::string algorithm;
  Rat value;
  Rat reference_value;
  Rat achieved_ratio;
  Rat guaranteed_ratio;   // 0 when the algorithm carries no guarantee
  bool guarantee_satisfied = false;
};

/// Checks all Instance invariants and returns the instance unchanged.
/// Throws Error{length_mismatch, non_positive_entry, non_monotone_capacities}.
Instance validate_instance(Instance inst);

/// True when every item fits the first capacity (w_i <= c_1); the
/// weight-constrained variant required by h1/h2/h2_backward/ht2.
bool is_weight_constrained(const Instance& inst);

/// Capacity feasibility of a schedule (start vector length is also checked).
bool is_feasible(const Instance& inst, const Schedule& s);

/// Objective value sum_t delta_t * sum_{i: start_i <= t} p_i.
/// Throws Error{infeasible_schedule} when a capacity constraint is violated.
Rat evaluate(const Instance& inst, const Schedule& s);

/// p_item * sum_{tau=start..T-1} delta_tau. Throws Error{index_out_of_range}.
Rat profit_contribution(const Instance& inst, int item, int start_period);

/// S[t] = sum_{tau=t}^{T-1} delta_tau, with S[T] = 0 (size T+1).
std::vector<Rat> suffix_multiplier_sums(const Instance& inst);

/// Per-period packed weight of a schedule (size T).
std::vector<Rat> packed_weights(const Instance& inst, const Schedule& s);

}  // namespace iklab

#endif  // IKLAB_INSTANCE_HPP
