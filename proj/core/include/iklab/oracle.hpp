#ifndef IKLAB_ORACLE_HPP
#define IKLAB_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "iklab/instance.hpp"
#include "iklab/lp.hpp"

namespace iklab {

struct OracleResult {
  Schedule schedule;
  Rat value;                              // z*
  std::vector<Rat> period_contributions;  // z*_t = delta_t * packed profit at t
  std::int64_t nodes = 0;
  bool optimal = true;  // false when the node budget cut the search short
};

struct OracleLimits {
  std::int64_t node_budget = 50'000'000;
};

/// Exact solver: depth-first search over per-item start periods with an
/// LP-relaxation bound on every node. Ground truth for all ratio tests.
/// When the budget runs out the best incumbent is returned with
/// optimal = false.
OracleResult solve_exact(const Instance& inst, const OracleLimits& limits = {});

/// Exact solver for the restricted problem: survivors only, reduced
/// capacities, starts not earlier than each item's earliest insertion time.
OracleResult solve_exact(const ResidualInstance& res, const OracleLimits& limits = {});

}  // namespace iklab

#endif  // IKLAB_ORACLE_HPP
