#include "iklab/lp.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "iklab/errors.hpp"
#include "iklab/kp.hpp"
#include "iklab/simplex.hpp"

namespace iklab {
namespace {

// Shared strict total order: p/w nonincreasing, ties by ascending item id.
bool more_efficient(const Instance& inst, int a, int b) {
  Rat lhs = inst.profits[a] * inst.weights[b];
  Rat rhs = inst.profits[b] * inst.weights[a];
  if (lhs != rhs) return lhs > rhs;
  return a < b;
}

FractionalSolution empty_solution(const Instance& inst) {
  FractionalSolution sol;
  sol.x.assign(inst.num_items(), std::vector<Rat>(inst.num_periods(), Rat(0)));
  sol.objective = 0;
  sol.used_capacity.assign(inst.num_periods(), Rat(0));
  return sol;
}

}  // namespace

FractionalSolution lp_relax_baseline(const Instance& inst) {
  int n = inst.num_items();
  int periods = inst.num_periods();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return more_efficient(inst, a, b); });

  std::vector<Rat> prefix_w(n + 1, Rat(0)), prefix_p(n + 1, Rat(0));
  for (int k = 0; k < n; ++k) {
    prefix_w[k + 1] = prefix_w[k] + inst.weights[order[k]];
    prefix_p[k + 1] = prefix_p[k] + inst.profits[order[k]];
  }

  FractionalSolution sol = empty_solution(inst);
  int k = 0;  // capacities are nondecreasing, so the packed prefix only grows
  for (int t = 0; t < periods; ++t) {
    const Rat& cap = inst.capacities[t];
    while (k < n && prefix_w[k + 1] <= cap) ++k;
    Rat lp_value = prefix_p[k];
    sol.used_capacity[t] = prefix_w[k];
    for (int j = 0; j < k; ++j) sol.x[order[j]][t] = 1;
    if (k < n) {
      int split = order[k];
      Rat fraction = (cap - prefix_w[k]) / inst.weights[split];
      sol.x[split][t] = fraction;
      lp_value += fraction * inst.profits[split];
      sol.used_capacity[t] = cap;
    }
    sol.objective += inst.multipliers[t] * lp_value;
  }
  return sol;
}

// ---------------------------------------------------------------------------
// Fast LP relaxation: lazily materialized median partition tree.
// ---------------------------------------------------------------------------

namespace {

class SplitTree {
 public:
  SplitTree(const Instance& inst, FastLpStats* stats)
      : inst_(inst), stats_(stats), items_(inst.num_items()) {
    std::iota(items_.begin(), items_.end(), 0);
    root_ = make_node(0, inst.num_items() - 1);
  }

  struct Walk {
    Rat prefix_weight;
    Rat prefix_profit;
    int split_item = -1;                            // -1: everything fits
    std::vector<std::pair<int, int>> packed_ranges; // committed [lo, hi] spans
  };

  Walk walk(const Rat& capacity) {
    Walk w;
    w.prefix_weight = 0;
    w.prefix_profit = 0;
    if (inst_.num_items() == 0) return w;
    int id = root_;
    materialize(id);
    if (nodes_[id].total_weight <= capacity) {
      w.prefix_weight = nodes_[id].total_weight;
      w.prefix_profit = nodes_[id].total_profit;
      w.packed_ranges.emplace_back(nodes_[id].lo, nodes_[id].hi);
      return w;
    }
    while (true) {
      materialize(id);
      Node& node = nodes_[id];
      if (node.lo == node.hi) {
        w.split_item = items_[node.lo];
        return w;
      }
      if (w.prefix_weight + node.high_weight > capacity) {
        id = node.left;
      } else {
        w.prefix_weight += node.high_weight;
        w.prefix_profit += node.high_profit;
        w.packed_ranges.emplace_back(node.lo, node.mid);
        id = node.right;
      }
    }
  }

  int item_at(int pos) const { return items_[pos]; }

 private:
  struct Node {
    int lo, hi, mid = -1;
    int left = -1, right = -1;
    bool materialized = false;
    Rat high_weight, high_profit;    // sums over [lo, mid]
    Rat total_weight, total_profit;  // sums over [lo, hi]
  };

  int make_node(int lo, int hi) {
    nodes_.push_back(Node{lo, hi});
    return static_cast<int>(nodes_.size()) - 1;
  }

  // Partitions the node range around its efficiency median and records the
  // half sums. Each range is processed exactly once across all capacities.
  void materialize(int id) {
    if (nodes_[id].materialized) return;
    nodes_[id].materialized = true;
    const int lo = nodes_[id].lo;
    const int hi = nodes_[id].hi;
    int size = hi - lo + 1;
    if (stats_) stats_->node_visits += size;
    Rat total_weight = 0, total_profit = 0;
    for (int i = lo; i <= hi; ++i) {
      total_weight += inst_.weights[items_[i]];
      total_profit += inst_.profits[items_[i]];
    }
    nodes_[id].total_weight = std::move(total_weight);
    nodes_[id].total_profit = std::move(total_profit);
    if (size == 1) return;
    const int mid = lo + (size - 1) / 2;
    select_median(lo, hi, mid);
    Rat high_weight = 0, high_profit = 0;
    for (int i = lo; i <= mid; ++i) {
      high_weight += inst_.weights[items_[i]];
      high_profit += inst_.profits[items_[i]];
    }
    // make_node may grow the node vector; do not hold references across it.
    int left = make_node(lo, mid);
    int right = make_node(mid + 1, hi);
    Node& node = nodes_[id];
    node.mid = mid;
    node.high_weight = std::move(high_weight);
    node.high_profit = std::move(high_profit);
    node.left = left;
    node.right = right;
  }

  bool before(int a, int b) const { return more_efficient(inst_, a, b); }

  void insertion_sort(int lo, int hi) {
    for (int i = lo + 1; i <= hi; ++i) {
      int v = items_[i];
      int j = i - 1;
      while (j >= lo && before(v, items_[j])) {
        items_[j + 1] = items_[j];
        --j;
      }
      items_[j + 1] = v;
    }
  }

  // Median-of-medians selection: after the call items_[k] holds the k-th
  // element of [lo, hi] in the efficiency order and the range is partitioned
  // around it. Worst-case linear.
  void select_median(int lo, int hi, int k) {
    while (true) {
      if (hi - lo < 10) {
        insertion_sort(lo, hi);
        return;
      }
      // Medians of groups of five move to the front of the range.
      int num_groups = 0;
      for (int g = lo; g <= hi; g += 5) {
        int end = std::min(g + 4, hi);
        insertion_sort(g, end);
        std::swap(items_[lo + num_groups], items_[g + (end - g) / 2]);
        ++num_groups;
      }
      int mid_group = lo + (num_groups - 1) / 2;
      select_median(lo, lo + num_groups - 1, mid_group);

      int pivot = items_[mid_group];
      std::swap(items_[mid_group], items_[hi]);
      int store = lo;
      for (int i = lo; i < hi; ++i) {
        if (before(items_[i], pivot)) {
          std::swap(items_[i], items_[store]);
          ++store;
        }
      }
      std::swap(items_[store], items_[hi]);
      if (store == k) return;
      if (k < store)
        hi = store - 1;
      else
        lo = store + 1;
    }
  }

  const Instance& inst_;
  FastLpStats* stats_;
  std::vector<int> items_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace

FractionalSolution lp_relax_fast(const Instance& inst, FastLpStats* stats) {
  FractionalSolution sol = empty_solution(inst);
  if (inst.num_items() == 0) return sol;
  SplitTree tree(inst, stats);
  for (int t = 0; t < inst.num_periods(); ++t) {
    const Rat& cap = inst.capacities[t];
    SplitTree::Walk w = tree.walk(cap);
    Rat lp_value = w.prefix_profit;
    sol.used_capacity[t] = w.prefix_weight;
    for (auto [lo, hi] : w.packed_ranges)
      for (int pos = lo; pos <= hi; ++pos) sol.x[tree.item_at(pos)][t] = 1;
    if (w.split_item >= 0) {
      Rat fraction = (cap - w.prefix_weight) / inst.weights[w.split_item];
      sol.x[w.split_item][t] = fraction;
      lp_value += fraction * inst.profits[w.split_item];
      sol.used_capacity[t] = cap;
    }
    sol.objective += inst.multipliers[t] * lp_value;
  }
  return sol;
}

// ---------------------------------------------------------------------------
// Residual problems.
// ---------------------------------------------------------------------------

ResidualInstance validate_residual(ResidualInstance res) {
  validate_instance(res.parent);
  int periods = res.parent.num_periods();
  if (static_cast<int>(res.residual_capacities.size()) != periods)
    throw Error(Errc::length_mismatch, "residual capacities");
  if (res.survivors.size() != res.earliest.size())
    throw Error(Errc::length_mismatch, "survivors vs earliest insertion times");
  for (int t = 0; t < periods; ++t) {
    if (res.residual_capacities[t] < 0)
      throw Error(Errc::non_positive_entry, "residual capacity of period " + std::to_string(t + 1));
    if (res.residual_capacities[t] > res.parent.capacities[t])
      throw Error(Errc::parameter_out_of_range,
                  "residual capacity exceeds parent capacity in period " + std::to_string(t + 1));
    if (t > 0 && res.residual_capacities[t - 1] > res.residual_capacities[t])
      throw Error(Errc::non_monotone_capacities, "residual capacities");
  }
  for (std::size_t k = 0; k < res.survivors.size(); ++k) {
    int id = res.survivors[k];
    if (id < 0 || id >= res.parent.num_items())
      throw Error(Errc::index_out_of_range, "survivor " + std::to_string(id));
    if (k > 0 && res.survivors[k - 1] >= id)
      throw Error(Errc::parameter_out_of_range, "survivors must be ascending and unique");
    int tj = res.earliest[k];
    if (tj < 0 || tj >= periods)
      throw Error(Errc::index_out_of_range, "earliest insertion time of item " + std::to_string(id));
    if (res.parent.weights[id] > res.residual_capacities[tj])
      throw Error(Errc::parameter_out_of_range,
                  "item " + std::to_string(id) + " does not fit at its earliest insertion time");
  }
  return res;
}

ResidualInstance full_residual(const Instance& inst) {
  ResidualInstance res;
  res.parent = inst;
  res.residual_capacities = inst.capacities;
  for (int i = 0; i < inst.num_items(); ++i) {
    for (int t = 0; t < inst.num_periods(); ++t) {
      if (inst.weights[i] <= inst.capacities[t]) {
        res.survivors.push_back(i);
        res.earliest.push_back(t);
        break;
      }
    }
  }
  return res;
}

FractionalSolution lp_relax_residual(const ResidualInstance& res) {
  const Instance& inst = res.parent;
  int periods = inst.num_periods();
  int m_items = static_cast<int>(res.survivors.size());

  // Variables: x_{j,t} for survivors j and t >= t_j; earlier periods are
  // fixed to zero and simply dropped from the model.
  std::vector<std::pair<int, int>> vars;  // (survivor position, period)
  std::vector<std::vector<int>> var_of(m_items, std::vector<int>(periods, -1));
  for (int k = 0; k < m_items; ++k)
    for (int t = res.earliest[k]; t < periods; ++t) {
      var_of[k][t] = static_cast<int>(vars.size());
      vars.emplace_back(k, t);
    }

  detail::BoundedLp lp;
  int n_vars = static_cast<int>(vars.size());
  lp.c.assign(n_vars, Rat(0));
  lp.upper.assign(n_vars, Rat(1));
  for (int v = 0; v < n_vars; ++v) {
    auto [k, t] = vars[v];
    lp.c[v] = inst.multipliers[t] * inst.profits[res.survivors[k]];
  }
  for (int t = 0; t < periods; ++t) {
    std::vector<Rat> row(n_vars, Rat(0));
    bool any = false;
    for (int k = 0; k < m_items; ++k)
      if (var_of[k][t] >= 0) {
        row[var_of[k][t]] = inst.weights[res.survivors[k]];
        any = true;
      }
    if (!any) continue;
    lp.a.push_back(std::move(row));
    lp.b.push_back(res.residual_capacities[t]);
  }
  for (int k = 0; k < m_items; ++k)
    for (int t = res.earliest[k] + 1; t < periods; ++t) {
      std::vector<Rat> row(n_vars, Rat(0));
      row[var_of[k][t - 1]] = 1;
      row[var_of[k][t]] = -1;
      lp.a.push_back(std::move(row));
      lp.b.push_back(Rat(0));
    }

  detail::LpResult lpres = detail::solve_bounded_lp(lp);

  FractionalSolution sol = empty_solution(inst);
  for (int v = 0; v < n_vars; ++v) {
    auto [k, t] = vars[v];
    sol.x[res.survivors[k]][t] = lpres.x[v];
  }
  sol.objective = lpres.objective;

  apply_fractionality_exchanges(inst, sol);

  Rat objective_check = 0;
  for (int i = 0; i < inst.num_items(); ++i)
    for (int t = 0; t < periods; ++t)
      if (sol.x[i][t] != 0) objective_check += inst.multipliers[t] * inst.profits[i] * sol.x[i][t];
  // The LP was optimal, so the profit-preserving exchanges cannot move the
  // objective in either direction.
  if (objective_check != sol.objective)
    throw std::logic_error("fractionality exchanges changed the LP objective");

  for (int t = 0; t < periods; ++t) {
    Rat used = 0;
    for (int i = 0; i < inst.num_items(); ++i)
      if (sol.x[i][t] != 0) used += inst.weights[i] * sol.x[i][t];
    if (used > res.residual_capacities[t])
      throw std::logic_error("residual LP solution exceeds a capacity");
    sol.used_capacity[t] = used;
  }

  if (count_fractional_items(sol) > periods)
    throw std::logic_error("residual LP kept more than T fractional items");
  return sol;
}

void apply_fractionality_exchanges(const Instance& inst, FractionalSolution& sol) {
  int periods = inst.num_periods();
  int n = inst.num_items();
  for (int t = 0; t < periods; ++t) {
    // Items whose first positive (and fractional) period is t.
    std::vector<int> fresh;
    for (int i = 0; i < n; ++i) {
      if (sol.x[i][t] <= 0 || sol.x[i][t] >= 1) continue;
      if (t == 0 || sol.x[i][t - 1] == 0) fresh.push_back(i);
    }
    std::sort(fresh.begin(), fresh.end(),
              [&](int a, int b) { return more_efficient(inst, a, b); });
    while (fresh.size() >= 2) {
      int receiver = fresh.front();
      int donor = fresh.back();
      Rat d = inst.weights[donor] * sol.x[donor][t];
      for (int tau = t; tau < periods; ++tau) {
        Rat room = inst.weights[receiver] * (Rat(1) - sol.x[receiver][tau]);
        Rat moved = std::min(d, room);
        if (moved == 0) break;  // receiver saturated from here on
        sol.x[receiver][tau] += moved / inst.weights[receiver];
        sol.x[donor][tau] -= moved / inst.weights[donor];
      }
      bool receiver_full = sol.x[receiver][t] == 1;
      bool donor_empty = sol.x[donor][t] == 0;
      assert(receiver_full || donor_empty);
      if (receiver_full) fresh.erase(fresh.begin());
      if (donor_empty) fresh.pop_back();
    }
  }
}

int count_fractional_items(const FractionalSolution& sol) {
  int count = 0;
  for (const auto& row : sol.x) {
    for (const Rat& v : row)
      if (v > 0 && v < 1) {
        ++count;
        break;
      }
  }
  return count;
}

std::pair<Schedule, Rat> round_down(const Instance& inst, const FractionalSolution& sol) {
  Schedule s;
  s.start.assign(inst.num_items(), kNever);
  for (int i = 0; i < inst.num_items(); ++i)
    for (int t = 0; t < inst.num_periods(); ++t)
      if (sol.x[i][t] == 1) {
        s.start[i] = t;
        break;
      }
  Rat value = evaluate(inst, s);
  return {std::move(s), value};
}

}  // namespace iklab
