#include "iklab/instance.hpp"

#include <string>

#include "iklab/errors.hpp"

namespace iklab {

Instance validate_instance(Instance inst) {
  if (inst.profits.size() != inst.weights.size())
    throw Error(Errc::length_mismatch, "profits has " + std::to_string(inst.profits.size()) +
                                           " entries, weights has " +
                                           std::to_string(inst.weights.size()));
  if (inst.capacities.size() != inst.multipliers.size())
    throw Error(Errc::length_mismatch,
                "capacities has " + std::to_string(inst.capacities.size()) +
                    " entries, multipliers has " + std::to_string(inst.multipliers.size()));
  if (inst.capacities.empty())
    throw Error(Errc::length_mismatch, "at least one period is required");
  for (std::size_t i = 0; i < inst.profits.size(); ++i) {
    if (inst.profits[i] <= 0)
      throw Error(Errc::non_positive_entry, "profit of item " + std::to_string(i));
    if (inst.weights[i] <= 0)
      throw Error(Errc::non_positive_entry, "weight of item " + std::to_string(i));
  }
  for (std::size_t t = 0; t < inst.capacities.size(); ++t) {
    if (inst.capacities[t] <= 0)
      throw Error(Errc::non_positive_entry, "capacity of period " + std::to_string(t + 1));
    if (inst.multipliers[t] <= 0)
      throw Error(Errc::non_positive_entry, "multiplier of period " + std::to_string(t + 1));
    if (t > 0 && inst.capacities[t - 1] > inst.capacities[t])
      throw Error(Errc::non_monotone_capacities,
                  "c_" + std::to_string(t) + " > c_" + std::to_string(t + 1));
  }
  return inst;
}

bool is_weight_constrained(const Instance& inst) {
  for (const Rat& w : inst.weights)
    if (w > inst.capacities.front()) return false;
  return true;
}

std::vector<Rat> packed_weights(const Instance& inst, const Schedule& s) {
  std::vector<Rat> used(inst.num_periods(), Rat(0));
  for (int i = 0; i < inst.num_items(); ++i) {
    int st = s.start[i];
    if (st == kNever) continue;
    for (int t = st; t < inst.num_periods(); ++t) used[t] += inst.weights[i];
  }
  return used;
}

bool is_feasible(const Instance& inst, const Schedule& s) {
  if (static_cast<int>(s.start.size()) != inst.num_items()) return false;
  for (int st : s.start)
    if (st != kNever && (st < 0 || st >= inst.num_periods())) return false;
  std::vector<Rat> used = packed_weights(inst, s);
  for (int t = 0; t < inst.num_periods(); ++t)
    if (used[t] > inst.capacities[t]) return false;
  return true;
}

Rat evaluate(const Instance& inst, const Schedule& s) {
  if (!is_feasible(inst, s))
    throw Error(Errc::infeasible_schedule, "schedule violates a capacity constraint");
  std::vector<Rat> suffix = suffix_multiplier_sums(inst);
  Rat total = 0;
  for (int i = 0; i < inst.num_items(); ++i)
    if (s.start[i] != kNever) total += inst.profits[i] * suffix[s.start[i]];
  return total;
}

Rat profit_contribution(const Instance& inst, int item, int start_period) {
  if (item < 0 || item >= inst.num_items())
    throw Error(Errc::index_out_of_range, "item " + std::to_string(item));
  if (start_period < 0 || start_period >= inst.num_periods())
    throw Error(Errc::index_out_of_range, "period " + std::to_string(start_period));
  Rat sum = 0;
  for (int t = start_period; t < inst.num_periods(); ++t) sum += inst.multipliers[t];
  return inst.profits[item] * sum;
}

std::vector<Rat> suffix_multiplier_sums(const Instance& inst) {
  int periods = inst.num_periods();
  std::vector<Rat> suffix(periods + 1, Rat(0));
  for (int t = periods - 1; t >= 0; --t) suffix[t] = suffix[t + 1] + inst.multipliers[t];
  return suffix;
}

}  // namespace iklab
