#ifndef IKLAB_WORSTCASE_HPP
#define IKLAB_WORSTCASE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iklab/instance.hpp"
#include "iklab/oracle.hpp"
#include "iklab/rational.hpp"

namespace iklab {

/// Exact-rational evaluation of a primal/dual solution pair against the
/// worst-case LP models. verified means: both solutions feasible, zero
/// duality gap, and every constraint expected to be tight is tight.
struct CertificateReport {
  std::string model;
  std::vector<std::pair<std::string, Rat>> primal_values;
  std::vector<std::pair<std::string, Rat>> dual_values;
  Rat max_primal_violation;
  Rat max_dual_violation;
  Rat primal_objective;
  Rat dual_objective;
  Rat gap;
  Rat certified_ratio;  // primal objective / OPT
  bool verified = false;
  std::string offending;  // first failed check, empty when verified
};

/// Unit-profit family on which the per-period knapsack algorithm meets its
/// 1/Theta guarantee exactly. Capacities are the closed-form per-period
/// values scaled to integers.
Instance gen_tight_astar(const std::vector<Rat>& multipliers);

/// Three-item family with ratio 1/2 + (T+1)/M for the split-item heuristic.
Instance gen_tight_h1(std::int64_t m, const std::vector<Rat>& multipliers, const Rat& delta);

/// 2T-item family with ratio -> sum(delta)/sum(delta_t * t) for the forward
/// greedy heuristic.
Instance gen_tight_h2(std::int64_t m, const std::vector<Rat>& multipliers);

/// Four-item, unit-multiplier family on which the backward heuristic drops
/// to value (1+gamma)T + 3 + 2*gamma against an optimum of 3T.
Instance gen_backward_counterexample(int periods, const Rat& gamma);

/// Five-item two-period family meeting the ht2 guarantee as gamma -> 0.
/// Picks the table for delta_2/delta_1 <= 1 or > 1.
Instance gen_tight_ht2(const Rat& delta1, const Rat& delta2, const Rat& gamma);

/// Closed-form optimum of a generated family, used when the instance is too
/// large for the oracle.
Rat astar_family_optimum(const std::vector<Rat>& multipliers);
Rat h1_family_optimum(std::int64_t m, const std::vector<Rat>& multipliers);
Rat h2_family_optimum(std::int64_t m, const std::vector<Rat>& multipliers);
Rat backward_family_optimum(int periods);
Rat backward_family_value(int periods, const Rat& gamma);  // the heuristic's value
Rat ht2_family_optimum(const Rat& delta1, const Rat& delta2, const Rat& gamma);

/// Substitutes the closed-form primal/dual solutions of the per-period
/// algorithm's worst-case LP and checks feasibility, tightness and the zero
/// gap exactly.
CertificateReport verify_duality_astar(const std::vector<Rat>& multipliers, const Rat& opt);

/// Same for the two-period model; eps > 0 checks the variant with the bound
/// constraint relaxed to (1-eps)*OPT and the primal solution scaled by
/// (1-eps).
CertificateReport verify_duality_ht2(const Rat& delta1, const Rat& delta2, const Rat& opt,
                                     const Rat& eps = Rat(0));

enum class Family { astar, h1, h2, backward, ht2 };

/// One parameter point of a family sweep; each family reads the fields it
/// needs.
struct SweepPoint {
  std::vector<Rat> multipliers;
  std::int64_t m = 0;
  int periods = 0;
  Rat gamma;
  Rat delta;
  Rat delta1;
  Rat delta2;
};

/// Generates each instance, runs the named algorithm and the reference
/// (closed-form optimum where available, otherwise the exact oracle), and
/// reports achieved vs guaranteed ratios. Points are evaluated concurrently
/// and merged by index.
std::vector<RatioReport> ratio_sweep(Family family, const std::vector<SweepPoint>& grid,
                                     const std::string& algorithm,
                                     const OracleLimits& limits = {});

/// Runs one algorithm against a reference optimum on one instance.
RatioReport run_ratio_case(const Instance& inst, const std::string& algorithm,
                           const std::optional<Rat>& known_optimum,
                           const OracleLimits& limits = {});

}  // namespace iklab

#endif  // IKLAB_WORSTCASE_HPP
