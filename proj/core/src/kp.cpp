#include "iklab/kp.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "iklab/errors.hpp"

namespace iklab {
namespace {

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

std::int64_t to_int64_checked(const Int& v, const char* what) {
  if (v < 0 || v > kInt64Max) throw Error(Errc::scale_overflow, what);
  return v.template convert_to<std::int64_t>();
}

// Scales a rational vector to integers by the lcm of its denominators.
std::vector<std::int64_t> integerize(const std::vector<Rat>& values, const Int& lcm,
                                     const char* what) {
  std::vector<std::int64_t> out;
  out.reserve(values.size());
  for (const Rat& v : values) out.push_back(to_int64_checked(rat_num(v) * (lcm / rat_den(v)), what));
  return out;
}

}  // namespace

KpInstance make_kp(const Instance& inst, const Rat& capacity) {
  KpInstance kp;
  kp.profits = inst.profits;
  kp.weights = inst.weights;
  kp.capacity = capacity;
  kp.ids.resize(inst.num_items());
  std::iota(kp.ids.begin(), kp.ids.end(), 0);
  return kp;
}

KpInstance make_kp(const Instance& inst, const Rat& capacity, const std::vector<int>& items) {
  KpInstance kp;
  kp.capacity = capacity;
  for (int id : items) {
    kp.profits.push_back(inst.profits[id]);
    kp.weights.push_back(inst.weights[id]);
    kp.ids.push_back(id);
  }
  return kp;
}

std::vector<int> efficiency_order(const KpInstance& kp) {
  std::vector<int> order(kp.profits.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    // p_a/w_a > p_b/w_b without forming quotients.
    Rat lhs = kp.profits[a] * kp.weights[b];
    Rat rhs = kp.profits[b] * kp.weights[a];
    if (lhs != rhs) return lhs > rhs;
    return a < b;
  });
  return order;
}

KpSolution kp_exact(const KpInstance& kp, std::int64_t table_cell_limit) {
  if (kp.capacity < 0) throw Error(Errc::capacity_negative, rat_str(kp.capacity));
  int n = static_cast<int>(kp.profits.size());

  Int weight_lcm = common_denominator(kp.weights);
  std::vector<std::int64_t> w = integerize(kp.weights, weight_lcm, "integerized weight");
  Int cap_scaled = rat_floor(kp.capacity * Rat(weight_lcm));
  Int total_weight = 0;
  for (std::int64_t wi : w) total_weight += wi;
  if (cap_scaled > total_weight) cap_scaled = total_weight;  // larger capacities never bind
  std::int64_t cap = to_int64_checked(cap_scaled, "integerized capacity");

  Int profit_lcm = common_denominator(kp.profits);
  std::vector<std::int64_t> p = integerize(kp.profits, profit_lcm, "integerized profit");
  Int profit_sum = 0;
  for (std::int64_t pi : p) profit_sum += pi;
  to_int64_checked(profit_sum, "integerized profit sum");

  if (static_cast<std::int64_t>(n + 1) > table_cell_limit / (cap + 1))
    throw Error(Errc::scale_overflow, "DP table would need " + std::to_string(n + 1) + " x " +
                                          std::to_string(cap + 1) + " cells");

  // g[i][r]: best profit over items i..n-1 at remaining capacity r. Filling
  // from the back lets the forward walk below prefer low indices, which
  // yields the lexicographically smallest optimal item set.
  std::size_t stride = static_cast<std::size_t>(cap) + 1;
  std::vector<std::int64_t> g(static_cast<std::size_t>(n + 1) * stride, 0);
  for (int i = n - 1; i >= 0; --i) {
    const std::int64_t* next = g.data() + static_cast<std::size_t>(i + 1) * stride;
    std::int64_t* cur = g.data() + static_cast<std::size_t>(i) * stride;
    for (std::int64_t r = 0; r <= cap; ++r) {
      std::int64_t best = next[r];
      if (w[i] <= r) best = std::max(best, p[i] + next[r - w[i]]);
      cur[r] = best;
    }
  }

  KpSolution sol;
  sol.profit = 0;
  sol.weight = 0;
  std::int64_t r = cap;
  for (int i = 0; i < n; ++i) {
    const std::int64_t* cur = g.data() + static_cast<std::size_t>(i) * stride;
    const std::int64_t* next = g.data() + static_cast<std::size_t>(i + 1) * stride;
    if (w[i] <= r && cur[r] == p[i] + next[r - w[i]]) {
      sol.items.push_back(kp.ids[i]);
      sol.profit += kp.profits[i];
      sol.weight += kp.weights[i];
      r -= w[i];
    }
  }
  return sol;
}

SplitResult kp_split(const KpInstance& kp, const std::vector<int>& order) {
  SplitResult res;
  res.order = order;
  res.prefix_profit = 0;
  res.prefix_weight = 0;
  res.fraction = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    int i = order[k];
    if (res.prefix_weight + kp.weights[i] <= kp.capacity) {
      res.prefix_weight += kp.weights[i];
      res.prefix_profit += kp.profits[i];
    } else {
      res.split_pos = static_cast<int>(k);
      res.fraction = (kp.capacity - res.prefix_weight) / kp.weights[i];
      res.lp_value = res.prefix_profit + res.fraction * kp.profits[i];
      return res;
    }
  }
  res.lp_value = res.prefix_profit;  // everything fits
  return res;
}

KpSolution kp_fptas(const KpInstance& kp, const Rat& eps) {
  if (eps <= 0 || eps >= 1) throw Error(Errc::epsilon_out_of_range, rat_str(eps));
  KpSolution sol;
  sol.exact = false;
  sol.eps = eps;
  sol.profit = 0;
  sol.weight = 0;

  std::vector<int> fitting;
  for (std::size_t i = 0; i < kp.profits.size(); ++i)
    if (kp.weights[i] <= kp.capacity) fitting.push_back(static_cast<int>(i));
  if (fitting.empty()) return sol;
  if (fitting.size() > 63)
    throw Error(Errc::scale_overflow, "approximation scheme is sized for at most 63 items");

  Rat max_profit = 0;
  for (int i : fitting) max_profit = std::max(max_profit, kp.profits[i]);
  // Scaled profits q_i = floor(p_i / K) with K = eps * max_profit / n; the
  // rounding loss is at most n*K = eps*max_profit <= eps*optimum.
  Rat scale = eps * max_profit / Rat(static_cast<int>(fitting.size()));
  std::vector<std::int64_t> q;
  std::int64_t q_total = 0;
  for (int i : fitting) {
    std::int64_t qi = to_int64_checked(rat_floor(kp.profits[i] / scale), "scaled profit");
    q.push_back(qi);
    q_total += qi;
  }
  if (q_total > 50'000'000) throw Error(Errc::scale_overflow, "scaled profit table too large");

  // dp[s] = (min weight achieving scaled profit s, chosen subset mask).
  struct Cell {
    Rat weight;
    std::uint64_t mask = 0;
    bool reachable = false;
  };
  std::vector<Cell> dp(static_cast<std::size_t>(q_total) + 1);
  dp[0].reachable = true;
  dp[0].weight = 0;
  std::int64_t reach = 0;
  for (std::size_t k = 0; k < fitting.size(); ++k) {
    int i = fitting[k];
    reach += q[k];
    for (std::int64_t s = reach; s >= q[k]; --s) {
      const Cell& from = dp[s - q[k]];
      if (!from.reachable) continue;
      Rat cand = from.weight + kp.weights[i];
      if (cand > kp.capacity) continue;
      Cell& to = dp[s];
      if (!to.reachable || cand < to.weight) {
        to.reachable = true;
        to.weight = cand;
        to.mask = from.mask | (std::uint64_t{1} << k);
      }
    }
  }
  std::uint64_t best_mask = 0;
  for (std::int64_t s = q_total; s > 0; --s)
    if (dp[s].reachable) {
      best_mask = dp[s].mask;
      break;
    }
  for (std::size_t k = 0; k < fitting.size(); ++k)
    if (best_mask >> k & 1) {
      int i = fitting[k];
      sol.items.push_back(kp.ids[i]);
      sol.profit += kp.profits[i];
      sol.weight += kp.weights[i];
    }
  std::sort(sol.items.begin(), sol.items.end());
  return sol;
}

}  // namespace iklab
