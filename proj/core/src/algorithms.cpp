#include "iklab/algorithms.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "iklab/errors.hpp"

namespace iklab {
namespace {

std::string period_label(int t) { return "t=" + std::to_string(t + 1); }

void require_weight_constrained(const Instance& inst, const char* algo) {
  if (!is_weight_constrained(inst))
    throw Error(Errc::not_weight_constrained,
                std::string(algo) + " needs every item to fit the first capacity");
}

bool more_efficient(const Instance& inst, int a, int b) {
  Rat lhs = inst.profits[a] * inst.weights[b];
  Rat rhs = inst.profits[b] * inst.weights[a];
  if (lhs != rhs) return lhs > rhs;
  return a < b;
}

}  // namespace

Rat compute_theta(const std::vector<Rat>& multipliers) {
  if (multipliers.empty())
    throw Error(Errc::parameter_out_of_range, "at least one multiplier required");
  for (const Rat& d : multipliers)
    if (d <= 0) throw Error(Errc::non_positive_entry, "multiplier");
  int periods = static_cast<int>(multipliers.size());
  std::vector<Rat> suffix(periods + 1, Rat(0));
  for (int t = periods - 1; t >= 0; --t) suffix[t] = suffix[t + 1] + multipliers[t];
  Rat theta = 0;
  for (int t = 0; t < periods; ++t) theta += multipliers[t] / suffix[t];
  return theta;
}

AlgoOutput alg_a(const Instance& inst, const Rat& eps) {
  if (eps < 0 || eps >= 1) throw Error(Errc::epsilon_out_of_range, rat_str(eps));
  int periods = inst.num_periods();
  std::vector<Rat> suffix = suffix_multiplier_sums(inst);

  AlgoOutput out;
  out.algorithm = eps == 0 ? "astar" : "a";
  out.schedule.start.assign(inst.num_items(), kNever);
  out.value = 0;
  out.guaranteed_ratio = (Rat(1) - eps) / compute_theta(inst.multipliers);

  int best_t = -1;
  KpSolution best_sol;
  for (int t = 0; t < periods; ++t) {
    KpInstance kp = make_kp(inst, inst.capacities[t]);
    KpSolution sol = eps == 0 ? kp_exact(kp) : kp_fptas(kp, eps);
    Rat candidate = suffix[t] * sol.profit;
    out.candidates.push_back({period_label(t), candidate});
    if (best_t < 0 || candidate > out.value) {
      out.value = candidate;
      best_t = t;
      best_sol = std::move(sol);
    }
  }
  for (int id : best_sol.items) out.schedule.start[id] = best_t;
  out.chosen = period_label(best_t);
  assert(evaluate(inst, out.schedule) == out.value);
  return out;
}

AlgoOutput alg_a_prime(const ResidualInstance& res, const Rat& eps) {
  if (eps <= 0 || eps >= 1) throw Error(Errc::epsilon_out_of_range, rat_str(eps));
  const Instance& inst = res.parent;
  int periods = inst.num_periods();
  std::vector<Rat> suffix = suffix_multiplier_sums(inst);

  AlgoOutput out;
  out.algorithm = "aprime";
  out.schedule.start.assign(inst.num_items(), kNever);
  out.value = 0;
  out.guaranteed_ratio = (Rat(1) - eps) / Rat(periods);

  {
    FractionalSolution lp = lp_relax_residual(res);
    auto [schedule, value] = round_down(inst, lp);
    out.candidates.push_back({"lp-round-down", value});
    out.schedule = std::move(schedule);
    out.value = value;
    out.chosen = "lp-round-down";
  }

  for (int t = 0; t < periods; ++t) {
    std::vector<int> available;
    for (std::size_t k = 0; k < res.survivors.size(); ++k)
      if (res.earliest[k] <= t) available.push_back(res.survivors[k]);
    KpSolution sol = kp_fptas(make_kp(inst, res.residual_capacities[t], available), eps);
    Rat candidate = suffix[t] * sol.profit;
    out.candidates.push_back({period_label(t), candidate});
    if (candidate > out.value) {
      out.value = candidate;
      out.chosen = period_label(t);
      out.schedule.start.assign(inst.num_items(), kNever);
      for (int id : sol.items) out.schedule.start[id] = t;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Approximation scheme
// ---------------------------------------------------------------------------

namespace {

struct PtasSearch {
  const Instance& inst;
  Rat eps;
  int k;
  std::int64_t budget;

  std::vector<std::vector<Rat>> pc;  // pc[i][t]
  std::vector<int> chosen_items;
  std::vector<int> chosen_starts;
  std::vector<Rat> used;  // per-period weight of the current guess
  Rat guess_value = 0;

  ResidualInstance residual_template;

  AlgoOutput out;

  PtasSearch(const Instance& instance, const Rat& eps_in, int k_in, std::int64_t budget_in)
      : inst(instance), eps(eps_in), k(k_in), budget(budget_in) {
    std::vector<Rat> suffix = suffix_multiplier_sums(inst);
    pc.assign(inst.num_items(), std::vector<Rat>(inst.num_periods(), Rat(0)));
    for (int i = 0; i < inst.num_items(); ++i)
      for (int t = 0; t < inst.num_periods(); ++t) pc[i][t] = inst.profits[i] * suffix[t];
    used.assign(inst.num_periods(), Rat(0));
    residual_template.parent = inst;
    out.algorithm = "ptas";
    out.schedule.start.assign(inst.num_items(), kNever);
    out.value = 0;
    out.chosen = "empty";
  }

  void record(const Rat& value, const Schedule& schedule, const std::string& label) {
    if (value > out.value || out.chosen == "empty") {
      out.value = value;
      out.schedule = schedule;
      out.chosen = label;
    }
  }

  Schedule guess_schedule() const {
    Schedule s;
    s.start.assign(inst.num_items(), kNever);
    for (std::size_t j = 0; j < chosen_items.size(); ++j)
      s.start[chosen_items[j]] = chosen_starts[j];
    return s;
  }

  // Builds the residual problem for the current size-k guess and completes it.
  void complete_with_residual() {
    ++out.configs_with_residual;
    int periods = inst.num_periods();
    Rat pcm = pc[chosen_items[0]][chosen_starts[0]];
    for (std::size_t j = 1; j < chosen_items.size(); ++j)
      pcm = std::min(pcm, pc[chosen_items[j]][chosen_starts[j]]);

    ResidualInstance& res = residual_template;
    res.residual_capacities.assign(periods, Rat(0));
    for (int t = 0; t < periods; ++t) res.residual_capacities[t] = inst.capacities[t] - used[t];
    for (int t = periods - 2; t >= 0; --t)
      res.residual_capacities[t] =
          std::min(res.residual_capacities[t], res.residual_capacities[t + 1]);

    res.survivors.clear();
    res.earliest.clear();
    std::vector<char> in_guess(inst.num_items(), 0);
    for (int id : chosen_items) in_guess[id] = 1;
    for (int i = 0; i < inst.num_items(); ++i) {
      if (in_guess[i]) continue;
      int t_cap = -1;
      for (int t = 0; t < periods; ++t)
        if (res.residual_capacities[t] >= inst.weights[i]) {
          t_cap = t;
          break;
        }
      if (t_cap < 0) continue;
      int t_pc = -1;
      for (int t = 0; t < periods; ++t)
        if (pc[i][t] <= pcm) {
          t_pc = t;
          break;
        }
      if (t_pc < 0) continue;
      res.survivors.push_back(i);
      res.earliest.push_back(std::max(t_cap, t_pc));
    }

    Rat total = guess_value;
    Schedule merged = guess_schedule();
    if (!res.survivors.empty()) {
      AlgoOutput completion = alg_a_prime(res, eps);
      total += completion.value;
      for (int id : res.survivors)
        if (completion.schedule.start[id] != kNever)
          merged.start[id] = completion.schedule.start[id];
    }
    record(total, merged, "guess+residual");
  }

  // Enumerates every feasible guess of at most k items with start periods.
  // Returns false once the configuration budget is exhausted.
  bool enumerate(int item) {
    if (static_cast<int>(chosen_items.size()) == k || item == inst.num_items()) {
      if (out.configs_enumerated >= budget) {
        out.complete = false;
        return false;
      }
      ++out.configs_enumerated;
      if (static_cast<int>(chosen_items.size()) < k) {
        record(guess_value, guess_schedule(), "direct-guess");
      } else {
        complete_with_residual();
      }
      return true;
    }
    if (!enumerate(item + 1)) return false;
    for (int st = 0; st < inst.num_periods(); ++st) {
      bool fits = true;
      for (int t = st; t < inst.num_periods() && fits; ++t)
        fits = used[t] + inst.weights[item] <= inst.capacities[t];
      if (!fits) continue;
      for (int t = st; t < inst.num_periods(); ++t) used[t] += inst.weights[item];
      chosen_items.push_back(item);
      chosen_starts.push_back(st);
      guess_value += pc[item][st];
      bool keep_going = enumerate(item + 1);
      guess_value -= pc[item][st];
      chosen_items.pop_back();
      chosen_starts.pop_back();
      for (int t = st; t < inst.num_periods(); ++t) used[t] -= inst.weights[item];
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

AlgoOutput ptas_approx(const Instance& inst, const Rat& eps, std::int64_t config_budget) {
  if (eps <= 0 || eps >= 1) throw Error(Errc::epsilon_out_of_range, rat_str(eps));
  Int k_raw = rat_ceil(Rat(inst.num_periods()) / eps);
  int k = inst.num_items();
  if (k_raw < k) k = k_raw.template convert_to<int>();

  PtasSearch search(inst, eps, k, config_budget);
  search.out.guaranteed_ratio = Rat(1) - eps;
  search.enumerate(0);

  // A size-k guess with the whole optimum inside it is evaluated without the
  // sub-k pass, so k == n still enumerates every subset.
  assert(evaluate(inst, search.out.schedule) == search.out.value);
  return std::move(search.out);
}

// ---------------------------------------------------------------------------
// Heuristics for the weight-constrained variant
// ---------------------------------------------------------------------------

AlgoOutput h1(const Instance& inst) {
  require_weight_constrained(inst, "h1");
  int n = inst.num_items();
  int periods = inst.num_periods();

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return more_efficient(inst, a, b); });
  std::vector<Rat> prefix_w(n + 1, Rat(0)), prefix_p(n + 1, Rat(0));
  for (int j = 0; j < n; ++j) {
    prefix_w[j + 1] = prefix_w[j] + inst.weights[order[j]];
    prefix_p[j + 1] = prefix_p[j] + inst.profits[order[j]];
  }
  // packed_count[t]: items fully packed by the greedy LP at capacity c_t.
  std::vector<int> packed_count(periods);
  int kk = 0;
  for (int t = 0; t < periods; ++t) {
    while (kk < n && prefix_w[kk + 1] <= inst.capacities[t]) ++kk;
    packed_count[t] = kk;
  }

  AlgoOutput out;
  out.algorithm = "h1";
  out.guaranteed_ratio = Rat(1, 2);
  out.schedule.start.assign(n, kNever);

  int s1 = packed_count[0];
  if (s1 == n) {
    // No split in the first period: everything fits everywhere.
    for (int j = 0; j < n; ++j) out.schedule.start[order[j]] = 0;
    out.value = evaluate(inst, out.schedule);
    out.chosen = "all-items";
    return out;
  }

  int split = order[s1];
  Rat full_weight = prefix_w[s1] + inst.weights[split];  // prefix plus split item
  int t_hat = periods;  // first period whose capacity holds the full prefix
  for (int t = 0; t < periods; ++t)
    if (inst.capacities[t] >= full_weight) {
      t_hat = t;
      break;
    }

  Rat p_prefix = prefix_p[s1];
  Rat p_split = inst.profits[split];
  bool use_prefix = p_prefix >= p_split;
  out.candidates.push_back({"prefix", p_prefix});
  out.candidates.push_back({"split-item", p_split});
  out.chosen = use_prefix ? "prefix" : "split-item";

  // Periods before t_hat carry the better of prefix/split item; from t_hat on
  // each item enters as soon as the per-period packed prefix reaches it.
  for (int j = 0; j < n; ++j) {
    int item = order[j];
    int start = kNever;
    if (j < s1 && use_prefix) {
      start = 0;
    } else if (j == s1 && !use_prefix) {
      start = 0;
    } else {
      for (int t = t_hat; t < periods; ++t)
        if (packed_count[t] > j) {
          start = t;
          break;
        }
    }
    out.schedule.start[item] = start;
  }
  out.value = evaluate(inst, out.schedule);
  return out;
}

AlgoOutput h2(const Instance& inst) {
  require_weight_constrained(inst, "h2");
  int periods = inst.num_periods();

  AlgoOutput out;
  out.algorithm = "h2";
  out.schedule.start.assign(inst.num_items(), kNever);
  Rat mult_sum = 0, weighted_sum = 0;
  for (int t = 0; t < periods; ++t) {
    mult_sum += inst.multipliers[t];
    weighted_sum += inst.multipliers[t] * Rat(t + 1);
  }
  out.guaranteed_ratio = mult_sum / weighted_sum;

  std::vector<int> unpacked(inst.num_items());
  std::iota(unpacked.begin(), unpacked.end(), 0);
  Rat packed_weight = 0;
  for (int t = 0; t < periods; ++t) {
    KpSolution sol = kp_exact(make_kp(inst, inst.capacities[t] - packed_weight, unpacked));
    for (int id : sol.items) out.schedule.start[id] = t;
    packed_weight += sol.weight;
    out.candidates.push_back({period_label(t), sol.profit});
    std::vector<int> rest;
    for (int id : unpacked)
      if (!std::binary_search(sol.items.begin(), sol.items.end(), id)) rest.push_back(id);
    unpacked = std::move(rest);
  }
  out.value = evaluate(inst, out.schedule);
  out.chosen = "forward-greedy";
  return out;
}

AlgoOutput h2_backward(const Instance& inst) {
  require_weight_constrained(inst, "h2_backward");
  int periods = inst.num_periods();

  AlgoOutput out;
  out.algorithm = "h2b";
  out.schedule.start.assign(inst.num_items(), kNever);

  KpSolution last = kp_exact(make_kp(inst, inst.capacities[periods - 1]));
  std::vector<int> packed = last.items;
  for (int id : packed) out.schedule.start[id] = periods - 1;
  out.candidates.push_back({period_label(periods - 1), last.profit});
  for (int t = periods - 2; t >= 0; --t) {
    KpSolution sol = kp_exact(make_kp(inst, inst.capacities[t], packed));
    for (int id : sol.items) out.schedule.start[id] = t;
    out.candidates.push_back({period_label(t), sol.profit});
    packed = sol.items;
  }
  std::reverse(out.candidates.begin(), out.candidates.end());
  out.value = evaluate(inst, out.schedule);
  out.chosen = "backward-greedy";
  return out;
}

// ---------------------------------------------------------------------------
// Two-period algorithm
// ---------------------------------------------------------------------------

Rat ht2_guarantee(const Rat& delta_ratio) {
  Rat d = delta_ratio;
  return (1 + 3 * d + 2 * d * d) / (1 + 4 * d + 2 * d * d);
}

Ht2Subsets ht2_subsets(const KpSolution& sol1, const KpSolution& sol2, const Rat& c1,
                       const Instance& inst) {
  Ht2Subsets sub;
  for (int id : sol1.items)
    if (std::binary_search(sol2.items.begin(), sol2.items.end(), id))
      sub.s12.push_back(id);
    else
      sub.s1.push_back(id);

  Rat acc = 0;
  for (int id : sub.s12) acc += inst.weights[id];
  Rat s1_weight = 0;
  for (int id : sub.s1) s1_weight += inst.weights[id];
  if (acc + s1_weight > c1) throw std::logic_error("Sol(KP_1) exceeds the first capacity");

  // Sol(KP_2) \ S12 in ascending id order: fill on top of the common items
  // until c_1 overflows; the overflowing item stands alone.
  bool overflowed = false;
  for (int id : sol2.items) {
    if (std::binary_search(sub.s12.begin(), sub.s12.end(), id)) continue;
    if (!overflowed && acc + inst.weights[id] <= c1) {
      sub.s2a.push_back(id);
      acc += inst.weights[id];
    } else if (!overflowed) {
      sub.s2_prime.push_back(id);
      overflowed = true;
    } else {
      sub.s2b.push_back(id);
    }
  }
  return sub;
}

AlgoOutput ht2(const Instance& inst, const Rat& eps) {
  if (inst.num_periods() != 2)
    throw Error(Errc::not_two_periods, "ht2 requires exactly two periods");
  require_weight_constrained(inst, "ht2");
  if (eps < 0 || eps >= 1) throw Error(Errc::epsilon_out_of_range, rat_str(eps));

  KpInstance kp1 = make_kp(inst, inst.capacities[0]);
  KpInstance kp2 = make_kp(inst, inst.capacities[1]);
  KpSolution sol1 = eps == 0 ? kp_exact(kp1) : kp_fptas(kp1, eps);
  KpSolution sol2 = eps == 0 ? kp_exact(kp2) : kp_fptas(kp2, eps);
  Ht2Subsets sub = ht2_subsets(sol1, sol2, inst.capacities[0], inst);

  AlgoOutput out;
  out.algorithm = "ht2";
  Rat ratio = ht2_guarantee(inst.multipliers[1] / inst.multipliers[0]);
  out.guaranteed_ratio = eps == 0 ? ratio : ratio * (Rat(1) - eps);

  auto make_schedule = [&](const std::vector<const std::vector<int>*>& first,
                           const std::vector<const std::vector<int>*>& second) {
    Schedule s;
    s.start.assign(inst.num_items(), kNever);
    for (const auto* group : second)
      for (int id : *group) s.start[id] = 1;
    for (const auto* group : first)
      for (int id : *group) s.start[id] = 0;
    return s;
  };

  // a) Sol(KP_1) in both periods, S2b joins in the second.
  Schedule sa = make_schedule({&sub.s12, &sub.s1}, {&sub.s2b});
  // b) S12 + S2a first, all of Sol(KP_2) second.
  Schedule sb = make_schedule({&sub.s12, &sub.s2a}, {&sub.s2_prime, &sub.s2b});
  // c) the overflowing item first, all of Sol(KP_2) second.
  Schedule sc = make_schedule({&sub.s2_prime}, {&sub.s12, &sub.s2a, &sub.s2b});

  const char* labels[3] = {"a:repeat-kp1", "b:under-split", "c:split-alone"};
  Schedule* schedules[3] = {&sa, &sb, &sc};
  int best = -1;
  for (int i = 0; i < 3; ++i) {
    Rat value = evaluate(inst, *schedules[i]);  // throws if a combination is infeasible
    out.candidates.push_back({labels[i], value});
    if (best < 0 || value > out.value) {
      best = i;
      out.value = value;
    }
  }
  out.schedule = *schedules[best];
  out.chosen = labels[best];
  return out;
}

AlgoOutput run_algorithm(const Instance& inst, const std::string& spec) {
  std::string name = spec;
  Rat eps = 0;
  bool has_eps = false;
  if (std::size_t colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    auto parsed = rat_parse(spec.substr(colon + 1));
    if (!parsed)
      throw Error(Errc::parse_error, "epsilon must be a rational like 3/10, got '" +
                                         spec.substr(colon + 1) + "'");
    eps = *parsed;
    has_eps = true;
  }
  if (name == "astar") return alg_a(inst, Rat(0));
  if (name == "a") return alg_a(inst, has_eps ? eps : Rat(1, 10));
  if (name == "aprime") return alg_a_prime(full_residual(inst), has_eps ? eps : Rat(1, 10));
  if (name == "ptas") return ptas_approx(inst, has_eps ? eps : Rat(1, 10));
  if (name == "h1") return h1(inst);
  if (name == "h2") return h2(inst);
  if (name == "h2b") return h2_backward(inst);
  if (name == "ht2") return ht2(inst, eps);
  throw Error(Errc::parse_error, "unknown algorithm '" + name + "'");
}

}  // namespace iklab
