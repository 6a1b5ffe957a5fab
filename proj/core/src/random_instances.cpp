#include "iklab/random_instances.hpp"

#include <algorithm>

namespace iklab {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  // Modulo reduction keeps the stream implementation-independent; the bias is
  // irrelevant at these range sizes.
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(engine() % span);
}

Rat Rng::uniform_rat(std::int64_t lo, std::int64_t hi, std::int64_t max_denominator) {
  std::int64_t den = max_denominator <= 1 ? 1 : uniform(1, max_denominator);
  return Rat(uniform(lo * den, hi * den), den);
}

Instance random_instance(Rng& rng, const RandomSpec& spec) {
  Instance inst;
  int n = static_cast<int>(rng.uniform(spec.n_min, spec.n_max));
  int periods = static_cast<int>(rng.uniform(spec.t_min, spec.t_max));
  Rat total_weight = 0;
  Rat max_weight = 0;
  for (int i = 0; i < n; ++i) {
    inst.profits.push_back(rng.uniform_rat(1, spec.profit_max, spec.max_denominator));
    Rat w = rng.uniform_rat(1, spec.weight_max, spec.max_denominator);
    inst.weights.push_back(w);
    total_weight += w;
    max_weight = std::max(max_weight, w);
  }
  for (int t = 0; t < periods; ++t) {
    if (spec.unit_multipliers)
      inst.multipliers.push_back(Rat(1));
    else
      inst.multipliers.push_back(rng.uniform_rat(1, spec.multiplier_max, spec.max_denominator));
  }
  // First capacity lands at 25..60% of the total weight; the remaining
  // periods add nonnegative increments.
  Rat c1 = total_weight * Rat(rng.uniform(25, 60), 100);
  Rat floor_weight = spec.weight_constrained ? max_weight : *std::min_element(
                                                   inst.weights.begin(), inst.weights.end());
  c1 = std::max(c1, floor_weight);
  inst.capacities.push_back(c1);
  for (int t = 1; t < periods; ++t) {
    Rat inc = total_weight * Rat(rng.uniform(0, 25), 100 * periods);
    inst.capacities.push_back(inst.capacities.back() + inc);
  }
  return validate_instance(std::move(inst));
}

ResidualInstance random_residual(Rng& rng, const RandomSpec& spec) {
  ResidualInstance res;
  res.parent = random_instance(rng, spec);
  int periods = res.parent.num_periods();
  res.residual_capacities.resize(periods);
  for (int t = 0; t < periods; ++t) {
    Rat cut = res.parent.capacities[t] * Rat(rng.uniform(0, 33), 100);
    res.residual_capacities[t] = res.parent.capacities[t] - cut;
  }
  for (int t = periods - 2; t >= 0; --t)
    res.residual_capacities[t] =
        std::min(res.residual_capacities[t], res.residual_capacities[t + 1]);
  for (int i = 0; i < res.parent.num_items(); ++i) {
    int t_cap = -1;
    for (int t = 0; t < periods; ++t)
      if (res.residual_capacities[t] >= res.parent.weights[i]) {
        t_cap = t;
        break;
      }
    if (t_cap < 0) continue;
    int t_j = std::max<int>(t_cap, static_cast<int>(rng.uniform(0, periods - 1)));
    res.survivors.push_back(i);
    res.earliest.push_back(t_j);
  }
  return validate_residual(std::move(res));
}

}  // namespace iklab
