#ifndef IKLAB_KP_HPP
#define IKLAB_KP_HPP

#include <cstdint>
#include <vector>

#include "iklab/instance.hpp"
#include "iklab/rational.hpp"

namespace iklab {

/// A single-period 0-1 knapsack extracted from an IKP instance.
/// ids maps positions back to item indices of the parent instance.
struct KpInstance {
  std::vector<Rat> profits;
  std::vector<Rat> weights;
  Rat capacity;
  std::vector<int> ids;
};

KpInstance make_kp(const Instance& inst, const Rat& capacity);
KpInstance make_kp(const Instance& inst, const Rat& capacity, const std::vector<int>& items);

struct KpSolution {
  std::vector<int> items;  // parent-instance ids, ascending
  Rat profit;
  Rat weight;
  bool exact = true;  // false: fptas result with recorded eps
  Rat eps;
};

/// Greedy split computed over a fixed efficiency order.
struct SplitResult {
  std::vector<int> order;  // positions sorted by p/w desc, index asc on ties
  int split_pos = -1;      // index into order of the first unpacked item, -1 if all fit
  Rat prefix_profit;       // profit of fully packed items
  Rat prefix_weight;
  Rat fraction;            // packed fraction of the split item, in [0,1); 0 at exact fill
  Rat lp_value;            // prefix_profit + fraction * p_split
};

/// Positions ordered by nonincreasing p/w, ties by ascending position.
/// This order is shared by every module so split items are reproducible.
std::vector<int> efficiency_order(const KpInstance& kp);

/// Exact DP over integerized weights. Among optimal item sets returns the
/// lexicographically smallest. Throws Error{capacity_negative, scale_overflow}.
/// table_cell_limit caps (n+1)*(scaled capacity+1).
KpSolution kp_exact(const KpInstance& kp, std::int64_t table_cell_limit = 10'000'000);

/// Dantzig greedy prefix at the given order; the LP optimum of the knapsack.
SplitResult kp_split(const KpInstance& kp, const std::vector<int>& order);

inline SplitResult kp_split(const KpInstance& kp) { return kp_split(kp, efficiency_order(kp)); }

/// Profit-scaling approximation scheme: profit >= (1-eps) * optimum.
/// Throws Error{epsilon_out_of_range} unless eps in (0,1).
KpSolution kp_fptas(const KpInstance& kp, const Rat& eps);

}  // namespace iklab

#endif  // IKLAB_KP_HPP
