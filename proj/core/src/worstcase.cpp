#include "iklab/worstcase.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "iklab/algorithms.hpp"
#include "iklab/errors.hpp"
#include "iklab/parallel.hpp"

namespace iklab {
namespace {

void require(bool ok, Errc code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

std::vector<Rat> suffix_sums(const std::vector<Rat>& multipliers) {
  std::vector<Rat> suffix(multipliers.size() + 1, Rat(0));
  for (int t = static_cast<int>(multipliers.size()) - 1; t >= 0; --t)
    suffix[t] = suffix[t + 1] + multipliers[t];
  return suffix;
}

// Collects one certificate check; equality constraints record |deviation|,
// inequality constraints record the positive part of the violation.
struct Checker {
  CertificateReport& report;
  bool primal;

  void equals(const std::string& name, const Rat& lhs, const Rat& rhs) {
    Rat dev = lhs >= rhs ? lhs - rhs : rhs - lhs;
    note(name, dev);
  }
  void at_most(const std::string& name, const Rat& lhs, const Rat& rhs) {
    note(name, lhs > rhs ? lhs - rhs : Rat(0));
  }
  void nonnegative(const std::string& name, const Rat& v) {
    note(name, v < 0 ? -v : Rat(0));
  }
  void note(const std::string& name, const Rat& violation) {
    Rat& slot = primal ? report.max_primal_violation : report.max_dual_violation;
    slot = std::max(slot, violation);
    if (violation != 0 && report.offending.empty()) report.offending = name;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

Instance gen_tight_astar(const std::vector<Rat>& multipliers) {
  require(!multipliers.empty(), Errc::parameter_out_of_range, "empty multipliers");
  for (const Rat& d : multipliers)
    require(d > 0, Errc::non_positive_entry, "multiplier");
  int periods = static_cast<int>(multipliers.size());
  std::vector<Rat> suffix = suffix_sums(multipliers);

  // Theta = a/b with b the lcm of the reduced per-period term denominators;
  // a further integer factor makes every capacity b/S_t and the item count
  // b/delta_T integral.
  std::vector<Rat> terms;
  for (int t = 0; t < periods; ++t) terms.push_back(multipliers[t] / suffix[t]);
  Int b = common_denominator(terms);
  std::vector<Rat> caps_raw;
  for (int t = 0; t < periods; ++t) caps_raw.push_back(Rat(b) / suffix[t]);
  std::vector<Rat> to_scale = caps_raw;
  to_scale.push_back(Rat(b) / multipliers[periods - 1]);
  Int scale = common_denominator(to_scale);

  Rat items = Rat(b * scale) / multipliers[periods - 1];
  require(rat_den(items) == 1 && rat_num(items) <= 5'000'000, Errc::parameter_out_of_range,
          "family would need " + rat_str(items) + " unit items");
  int n = rat_num(items).template convert_to<int>();

  Instance inst;
  inst.profits.assign(n, Rat(1));
  inst.weights.assign(n, Rat(1));
  inst.multipliers = multipliers;
  for (int t = 0; t < periods; ++t) inst.capacities.push_back(caps_raw[t] * Rat(scale));
  return validate_instance(std::move(inst));
}

Rat astar_family_optimum(const std::vector<Rat>& multipliers) {
  Instance inst = gen_tight_astar(multipliers);
  Rat opt = 0;
  for (int t = 0; t < inst.num_periods(); ++t) opt += inst.multipliers[t] * inst.capacities[t];
  return opt;
}

Instance gen_tight_h1(std::int64_t m, const std::vector<Rat>& multipliers, const Rat& delta) {
  int periods = static_cast<int>(multipliers.size());
  require(periods >= 1, Errc::parameter_out_of_range, "at least one period");
  require(m >= 2 * (periods + 1), Errc::parameter_out_of_range, "M must dominate T");
  require(delta > 0 && delta < 1, Errc::parameter_out_of_range, "delta must be in (0,1)");
  Rat half = Rat(m, 2);
  Instance inst;
  inst.profits = {half + delta, half + periods + 1, half - delta};
  inst.weights = {half, half + periods + 1, half};
  inst.multipliers = multipliers;
  for (int t = 0; t < periods; ++t) inst.capacities.push_back(Rat(m + t + 1));
  return validate_instance(std::move(inst));
}

Rat h1_family_optimum(std::int64_t m, const std::vector<Rat>& multipliers) {
  Rat opt = 0;
  for (const Rat& d : multipliers) opt += d * m;
  return opt;
}

Instance gen_tight_h2(std::int64_t m, const std::vector<Rat>& multipliers) {
  int periods = static_cast<int>(multipliers.size());
  require(periods >= 2, Errc::parameter_out_of_range, "needs T >= 2");
  require(m > periods, Errc::parameter_out_of_range, "needs M > T");
  Instance inst;
  inst.profits.push_back(Rat(m + periods - 1));
  inst.weights.push_back(Rat(m + periods - 1));
  for (int j = 1; j < periods; ++j) {
    inst.profits.push_back(Rat(1));
    inst.weights.push_back(Rat(m - 1));
  }
  for (int j = 0; j < periods; ++j) {
    inst.profits.push_back(Rat(m));
    inst.weights.push_back(Rat(m));
  }
  inst.multipliers = multipliers;
  for (int t = 0; t < periods; ++t)
    inst.capacities.push_back(Rat((t + 1) * m + (periods - t - 1)));
  return validate_instance(std::move(inst));
}

Rat h2_family_optimum(std::int64_t m, const std::vector<Rat>& multipliers) {
  Rat opt = 0;
  for (std::size_t t = 0; t < multipliers.size(); ++t)
    opt += multipliers[t] * Rat(static_cast<std::int64_t>(t + 1)) * m;
  return opt;
}

Instance gen_backward_counterexample(int periods, const Rat& gamma) {
  require(periods >= 3, Errc::parameter_out_of_range, "needs T >= 3");
  require(gamma > 0 && gamma < 1, Errc::parameter_out_of_range, "gamma must be in (0,1)");
  Instance inst;
  inst.profits = {Rat(1) + gamma, Rat(1) + gamma, Rat(1), Rat(2)};
  inst.weights = {Rat(2), Rat(2), Rat(1), Rat(3) - gamma};
  inst.multipliers.assign(periods, Rat(1));
  inst.capacities.assign(periods, Rat(4) - gamma);
  inst.capacities[periods - 2] = Rat(4) + gamma;
  inst.capacities[periods - 1] = Rat(5);
  return validate_instance(std::move(inst));
}

Rat backward_family_optimum(int periods) { return Rat(3) * periods; }

Rat backward_family_value(int periods, const Rat& gamma) {
  return (Rat(1) + gamma) * periods + 3 + 2 * gamma;
}

Instance gen_tight_ht2(const Rat& delta1, const Rat& delta2, const Rat& gamma) {
  require(delta1 > 0 && delta2 > 0, Errc::parameter_out_of_range, "multipliers must be positive");
  require(gamma > 0 && gamma < Rat(1, 2), Errc::parameter_out_of_range,
          "gamma must be in (0, 1/2)");
  Rat dr = delta2 / delta1;
  Instance inst;
  inst.multipliers = {delta1, delta2};
  inst.capacities = {Rat(3) + gamma, Rat(4)};
  if (dr <= 1) {
    inst.profits = {(1 + dr) / delta1, (1 + dr) / delta1, dr / delta1,
                    (1 + 2 * dr - gamma) / delta1, Rat(1) / delta1};
    inst.weights = {Rat(2), Rat(2), Rat(1) + gamma, Rat(3) - 2 * gamma, Rat(1) + 2 * gamma};
  } else {
    inst.profits = {(1 + 2 * dr) / delta1, (1 + dr) / delta1, (1 + dr) / delta1,
                    (dr - gamma) / delta1, Rat(1) / delta1};
    inst.weights = {Rat(3) + gamma, Rat(2), Rat(2), Rat(1), Rat(1)};
  }
  return validate_instance(std::move(inst));
}

Rat ht2_family_optimum(const Rat& delta1, const Rat& delta2, const Rat& gamma) {
  Rat dr = delta2 / delta1;
  return 1 + 4 * dr + 2 * dr * dr - (1 + dr) * gamma;
}

// ---------------------------------------------------------------------------
// Duality certificates
// ---------------------------------------------------------------------------

CertificateReport verify_duality_astar(const std::vector<Rat>& multipliers, const Rat& opt) {
  require(!multipliers.empty(), Errc::parameter_out_of_range, "empty multipliers");
  for (const Rat& d : multipliers) require(d > 0, Errc::non_positive_entry, "multiplier");
  require(opt > 0, Errc::parameter_out_of_range, "OPT must be positive");
  int periods = static_cast<int>(multipliers.size());
  std::vector<Rat> suffix = suffix_sums(multipliers);
  Rat theta = compute_theta(multipliers);

  CertificateReport report;
  report.model = "astar";
  report.max_primal_violation = 0;
  report.max_dual_violation = 0;

  Rat h_a = opt / theta;
  std::vector<Rat> h(periods);
  for (int t = 0; t < periods; ++t) h[t] = opt / (suffix[t] * theta);
  Rat lambda_last = Rat(1) / theta;
  std::vector<Rat> lambda(periods);
  for (int t = 0; t < periods; ++t) lambda[t] = multipliers[t] / (suffix[t] * theta);

  report.primal_values.emplace_back("h^A", h_a);
  for (int t = 0; t < periods; ++t)
    report.primal_values.emplace_back("h_" + std::to_string(t + 1), h[t]);
  for (int t = 0; t < periods; ++t)
    report.dual_values.emplace_back("lambda_" + std::to_string(t + 1), lambda[t]);
  report.dual_values.emplace_back("lambda_" + std::to_string(periods + 1), lambda_last);

  Checker primal{report, true};
  // Every constraint of both models is satisfied with equality at the
  // closed-form solutions.
  for (int t = 0; t < periods; ++t)
    primal.equals("primal candidate constraint t=" + std::to_string(t + 1),
                  h_a - suffix[t] * h[t], Rat(0));
  Rat bound = 0;
  for (int t = 0; t < periods; ++t) bound += multipliers[t] * h[t];
  primal.equals("primal bound constraint", bound, opt);
  primal.nonnegative("h^A >= 0", h_a);
  for (int t = 0; t < periods; ++t)
    primal.nonnegative("h_" + std::to_string(t + 1) + " >= 0", h[t]);

  Checker dual{report, false};
  Rat lambda_sum = 0;
  for (int t = 0; t < periods; ++t) lambda_sum += lambda[t];
  dual.equals("dual normalization sum(lambda_t) = 1", lambda_sum, Rat(1));
  for (int t = 0; t < periods; ++t)
    dual.equals("dual constraint t=" + std::to_string(t + 1),
                -suffix[t] * lambda[t] + multipliers[t] * lambda_last, Rat(0));
  for (int t = 0; t < periods; ++t)
    dual.nonnegative("lambda_" + std::to_string(t + 1) + " >= 0", lambda[t]);
  dual.nonnegative("lambda_" + std::to_string(periods + 1) + " >= 0", lambda_last);

  report.primal_objective = h_a;
  report.dual_objective = opt * lambda_last;
  report.gap = report.primal_objective - report.dual_objective;
  if (report.gap != 0 && report.offending.empty()) report.offending = "duality gap";
  report.certified_ratio = h_a / opt;
  report.verified = report.max_primal_violation == 0 && report.max_dual_violation == 0 &&
                    report.gap == 0;
  return report;
}

CertificateReport verify_duality_ht2(const Rat& delta1, const Rat& delta2, const Rat& opt,
                                     const Rat& eps) {
  require(delta1 > 0 && delta2 > 0, Errc::parameter_out_of_range, "multipliers must be positive");
  require(opt > 0, Errc::parameter_out_of_range, "OPT must be positive");
  require(eps >= 0 && eps < 1, Errc::epsilon_out_of_range, rat_str(eps));

  Rat dr = delta2 / delta1;
  Rat denom = 1 + 4 * dr + 2 * dr * dr;
  Rat keep = Rat(1) - eps;

  CertificateReport report;
  report.model = "ht2";
  report.max_primal_violation = 0;
  report.max_dual_violation = 0;

  Rat h = keep * (1 + 3 * dr + 2 * dr * dr) * opt / denom;
  Rat s1 = keep * dr * opt / (delta1 * denom);
  Rat s12 = keep * (1 + dr) * opt / (delta1 * denom);
  Rat s2p = s12;
  Rat s2a = 0, s2b = 0;
  Rat l1 = (1 + 2 * dr) / denom;
  Rat l2 = (1 + dr) * dr / denom;
  Rat l3 = l2;
  Rat l4 = (1 + 3 * dr + 2 * dr * dr) / denom;

  report.primal_values = {{"h", h},       {"s_12", s12}, {"s_1", s1},
                          {"s_2a", s2a},  {"s_2'", s2p}, {"s_2b", s2b}};
  report.dual_values = {
      {"lambda_1", l1}, {"lambda_2", l2}, {"lambda_3", l3}, {"lambda_4", l4}};

  Rat both = delta1 + delta2;
  Checker primal{report, true};
  primal.equals("primal constraint (a)", h - (both * (s12 + s1) + delta2 * s2b), Rat(0));
  primal.equals("primal constraint (b)", h - (both * (s12 + s2a) + delta2 * (s2p + s2b)),
                Rat(0));
  primal.equals("primal constraint (c)", h - (both * s2p + delta2 * (s12 + s2a + s2b)), Rat(0));
  primal.equals("primal bound constraint",
                delta1 * (s12 + s1) + delta2 * (s12 + s2a + s2p + s2b), keep * opt);
  for (const auto& [name, value] : report.primal_values)
    primal.nonnegative(name + " >= 0", value);

  Checker dual{report, false};
  dual.equals("dual constraint for h", l1 + l2 + l3, Rat(1));
  dual.equals("dual constraint for s_1", delta1 * l4 - both * l1, Rat(0));
  dual.equals("dual constraint for s_12", -delta2 * l3 - both * (l1 + l2 - l4), Rat(0));
  dual.equals("dual constraint for s_2a", delta2 * (l4 - l3) - both * l2, Rat(0));
  dual.equals("dual constraint for s_2'", delta2 * (l4 - l2) - both * l3, Rat(0));
  dual.at_most("dual constraint for s_2b", -delta2 * (l1 + l2 + l3 - l4), Rat(0));
  for (const auto& [name, value] : report.dual_values)
    dual.nonnegative(name + " >= 0", value);

  report.primal_objective = h;
  report.dual_objective = keep * opt * l4;
  report.gap = report.primal_objective - report.dual_objective;
  if (report.gap != 0 && report.offending.empty()) report.offending = "duality gap";
  report.certified_ratio = h / opt;
  report.verified = report.max_primal_violation == 0 && report.max_dual_violation == 0 &&
                    report.gap == 0;
  return report;
}

// ---------------------------------------------------------------------------
// Ratio sweeps
// ---------------------------------------------------------------------------

RatioReport run_ratio_case(const Instance& inst, const std::string& algorithm,
                           const std::optional<Rat>& known_optimum, const OracleLimits& limits) {
  AlgoOutput out = run_algorithm(inst, algorithm);
  Rat reference;
  if (known_optimum) {
    reference = *known_optimum;
  } else {
    OracleResult oracle = solve_exact(inst, limits);
    if (!oracle.optimal)
      throw Error(Errc::budget_exceeded, "oracle hit its node budget during a ratio sweep");
    reference = oracle.value;
  }
  RatioReport report;
  report.algorithm = out.algorithm;
  report.value = out.value;
  report.reference_value = reference;
  report.achieved_ratio = reference > 0 ? out.value / reference : Rat(1);
  report.guaranteed_ratio = out.guaranteed_ratio.value_or(Rat(0));
  report.guarantee_satisfied = report.achieved_ratio >= report.guaranteed_ratio;
  return report;
}

std::vector<RatioReport> ratio_sweep(Family family, const std::vector<SweepPoint>& grid,
                                     const std::string& algorithm, const OracleLimits& limits) {
  std::vector<RatioReport> reports(grid.size());
  parallel_for(static_cast<int>(grid.size()), [&](int i) {
    const SweepPoint& p = grid[i];
    Instance inst;
    std::optional<Rat> reference;
    switch (family) {
      case Family::astar:
        inst = gen_tight_astar(p.multipliers);
        reference = astar_family_optimum(p.multipliers);
        break;
      case Family::h1:
        inst = gen_tight_h1(p.m, p.multipliers, p.delta);
        reference = h1_family_optimum(p.m, p.multipliers);
        break;
      case Family::h2:
        inst = gen_tight_h2(p.m, p.multipliers);
        reference = h2_family_optimum(p.m, p.multipliers);
        break;
      case Family::backward:
        inst = gen_backward_counterexample(p.periods, p.gamma);
        reference = backward_family_optimum(p.periods);
        break;
      case Family::ht2:
        inst = gen_tight_ht2(p.delta1, p.delta2, p.gamma);
        reference = ht2_family_optimum(p.delta1, p.delta2, p.gamma);
        break;
    }
    reports[i] = run_ratio_case(inst, algorithm, reference, limits);
  });
  return reports;
}

}  // namespace iklab
