#ifndef IKLAB_RANDOM_INSTANCES_HPP
#define IKLAB_RANDOM_INSTANCES_HPP

#include <cstdint>
#include <random>

#include "iklab/instance.hpp"
#include "iklab/lp.hpp"

namespace iklab {

/// mt19937_64 with hand-rolled range reduction so that streams are identical
/// across standard libraries; seeds are recorded in reports.
struct Rng {
  explicit Rng(std::uint64_t seed) : engine(seed) {}

  std::mt19937_64 engine;

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);  // inclusive
  Rat uniform_rat(std::int64_t lo, std::int64_t hi, std::int64_t max_denominator);
};

struct RandomSpec {
  int n_min = 3, n_max = 10;
  int t_min = 1, t_max = 3;
  std::int64_t profit_max = 20;
  std::int64_t weight_max = 20;
  std::int64_t max_denominator = 1;  // >1 draws non-integer rational data
  bool weight_constrained = false;   // force w_i <= c_1
  bool unit_multipliers = true;
  std::int64_t multiplier_max = 4;
};

Instance random_instance(Rng& rng, const RandomSpec& spec);

/// Random residual problem over a fresh random instance: reduced capacities
/// and earliest insertion times; items that fit nowhere are dropped.
ResidualInstance random_residual(Rng& rng, const RandomSpec& spec);

}  // namespace iklab

#endif  // IKLAB_RANDOM_INSTANCES_HPP
