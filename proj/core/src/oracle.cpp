#include "iklab/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "iklab/errors.hpp"

namespace iklab {
namespace {

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

std::int64_t checked(const Int& v, const char* what) {
  if (v < 0 || v > kInt64Max) throw Error(Errc::scale_overflow, what);
  return v.template convert_to<std::int64_t>();
}

// The whole search runs on integers: weights and capacities share one scale,
// profits times multipliers another. Values divide back out exactly.
struct Engine {
  int n = 0, periods = 0;
  std::vector<std::int64_t> weights, caps;
  std::vector<int> earliest_start;                     // per item (0-based)
  std::vector<std::vector<std::int64_t>> pc;           // pc[i][t], scaled
  std::vector<std::int64_t> mult;                      // scaled multipliers
  std::vector<int> by_contribution;                    // search order
  std::vector<int> by_efficiency;                      // bound order
  Rat value_scale;                                     // raw / value_scale = exact value

  std::int64_t budget = 0;
  std::int64_t nodes = 0;
  bool aborted = false;

  std::vector<std::int64_t> rem;
  std::vector<char> assigned;
  std::vector<int> start;       // current partial assignment
  std::vector<int> best_start;
  std::int64_t current = 0, best = -1;

  void build(const Instance& inst, const std::vector<int>& ids,
             const std::vector<Rat>& capacities, const std::vector<int>& earliest) {
    n = static_cast<int>(ids.size());
    periods = inst.num_periods();

    std::vector<Rat> weight_data;
    for (int id : ids) weight_data.push_back(inst.weights[id]);
    for (const Rat& c : capacities) weight_data.push_back(c);
    Int wl = common_denominator(weight_data);
    for (int id : ids) weights.push_back(checked(rat_num(inst.weights[id]) * (wl / rat_den(inst.weights[id])), "scaled weight"));
    for (const Rat& c : capacities) caps.push_back(checked(rat_num(c) * (wl / rat_den(c)), "scaled capacity"));

    std::vector<Rat> profit_data;
    for (int id : ids) profit_data.push_back(inst.profits[id]);
    Int pl = common_denominator(profit_data);
    std::vector<std::int64_t> profits;
    for (int id : ids) profits.push_back(checked(rat_num(inst.profits[id]) * (pl / rat_den(inst.profits[id])), "scaled profit"));
    Int dl = common_denominator(inst.multipliers);
    for (const Rat& d : inst.multipliers) mult.push_back(checked(rat_num(d) * (dl / rat_den(d)), "scaled multiplier"));
    value_scale = Rat(pl * dl);

    std::vector<std::int64_t> suffix(periods + 1, 0);
    for (int t = periods - 1; t >= 0; --t) {
      Int s = Int(suffix[t + 1]) + mult[t];
      suffix[t] = checked(s, "scaled multiplier sum");
    }
    pc.assign(n, std::vector<std::int64_t>(periods, 0));
    Int total_value = 0;
    for (int i = 0; i < n; ++i) {
      for (int t = 0; t < periods; ++t)
        pc[i][t] = checked(Int(profits[i]) * suffix[t], "profit contribution");
      total_value += pc[i][0];
    }
    checked(total_value, "total objective");

    earliest_start = {};
    earliest_start.reserve(n);
    for (int e : earliest) earliest_start.push_back(e);

    by_contribution.resize(n);
    std::iota(by_contribution.begin(), by_contribution.end(), 0);
    std::sort(by_contribution.begin(), by_contribution.end(), [&](int a, int b) {
      std::int64_t ca = pc[a][earliest_start[a]], cb = pc[b][earliest_start[b]];
      if (ca != cb) return ca > cb;
      return a < b;
    });
    by_efficiency.resize(n);
    std::iota(by_efficiency.begin(), by_efficiency.end(), 0);
    std::sort(by_efficiency.begin(), by_efficiency.end(), [&](int a, int b) {
      __int128 lhs = static_cast<__int128>(profits[a]) * weights[b];
      __int128 rhs = static_cast<__int128>(profits[b]) * weights[a];
      if (lhs != rhs) return lhs > rhs;
      return a < b;
    });
    profits_ = std::move(profits);
  }

  // Per-period fractional knapsack over unassigned items, floored to the
  // integer value grid; admissible because the true completion is integral.
  __int128 bound() const {
    __int128 total = 0;
    for (int t = 0; t < periods; ++t) {
      std::int64_t cap = rem[t];
      if (cap <= 0) continue;
      __int128 profit_here = 0;
      for (int i : by_efficiency) {
        if (assigned[i] || earliest_start[i] > t) continue;
        if (weights[i] <= cap) {
          cap -= weights[i];
          profit_here += profits_[i];
          if (cap == 0) break;
        } else {
          profit_here += static_cast<__int128>(profits_[i]) * cap / weights[i];
          break;
        }
      }
      total += static_cast<__int128>(mult[t]) * profit_here;
    }
    return total;
  }

  void dfs(int k) {
    if (aborted) return;
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    if (k == n) {
      if (current > best) {
        best = current;
        best_start = start;
      }
      return;
    }
    if (current + bound() <= best) return;

    int item = by_contribution[k];
    std::int64_t w = weights[item];
    // Earliest feasible start given the partial packing; feasibility at t is
    // monotone in t because the remaining-capacity suffix minimum only grows.
    std::int64_t suffix_min = kInt64Max;
    int first_ok = -1;
    for (int t = periods - 1; t >= earliest_start[item]; --t) {
      suffix_min = std::min(suffix_min, rem[t]);
      if (suffix_min >= w) first_ok = t;
    }
    if (first_ok >= 0) {
      assigned[item] = 1;
      for (int t = first_ok; t < periods; ++t) {
        for (int tau = t; tau < periods; ++tau) rem[tau] -= w;
        current += pc[item][t];
        start[item] = t;
        dfs(k + 1);
        current -= pc[item][t];
        for (int tau = t; tau < periods; ++tau) rem[tau] += w;
        if (aborted) break;
      }
      start[item] = kNever;
      assigned[item] = 0;
    }
    if (!aborted) {
      assigned[item] = 1;
      dfs(k + 1);
      assigned[item] = 0;
    }
  }

  std::vector<std::int64_t> profits_;
};

OracleResult run_engine(const Instance& inst, const std::vector<int>& ids,
                        const std::vector<Rat>& capacities, const std::vector<int>& earliest,
                        const OracleLimits& limits) {
  Engine eng;
  eng.build(inst, ids, capacities, earliest);
  eng.budget = limits.node_budget;
  eng.rem = eng.caps;
  eng.assigned.assign(eng.n, 0);
  eng.start.assign(eng.n, kNever);
  eng.best_start.assign(eng.n, kNever);
  eng.best = -1;
  eng.dfs(0);

  OracleResult result;
  result.nodes = eng.nodes;
  result.optimal = !eng.aborted;
  result.schedule.start.assign(inst.num_items(), kNever);
  for (int k = 0; k < eng.n; ++k) result.schedule.start[ids[k]] = eng.best_start[k];
  result.value = Rat(std::max<std::int64_t>(eng.best, 0)) / eng.value_scale;

  Rat check = 0;
  std::vector<Rat> suffix = suffix_multiplier_sums(inst);
  result.period_contributions.assign(inst.num_periods(), Rat(0));
  for (int i = 0; i < inst.num_items(); ++i) {
    int st = result.schedule.start[i];
    if (st == kNever) continue;
    check += inst.profits[i] * suffix[st];
    for (int t = st; t < inst.num_periods(); ++t)
      result.period_contributions[t] += inst.multipliers[t] * inst.profits[i];
  }
  if (check != result.value) throw std::logic_error("oracle value does not match its schedule");
  return result;
}

}  // namespace

OracleResult solve_exact(const Instance& inst, const OracleLimits& limits) {
  std::vector<int> ids(inst.num_items());
  std::iota(ids.begin(), ids.end(), 0);
  std::vector<int> earliest(inst.num_items(), 0);
  return run_engine(inst, ids, inst.capacities, earliest, limits);
}

OracleResult solve_exact(const ResidualInstance& res, const OracleLimits& limits) {
  return run_engine(res.parent, res.survivors, res.residual_capacities, res.earliest, limits);
}

}  // namespace iklab
