#ifndef IKLAB_ALGORITHMS_HPP
#define IKLAB_ALGORITHMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iklab/instance.hpp"
#include "iklab/kp.hpp"
#include "iklab/lp.hpp"

namespace iklab {

struct AlgoOutput {
  std::string algorithm;
  Schedule schedule;
  Rat value;
  std::optional<Rat> guaranteed_ratio;

  struct Candidate {
    std::string label;
    Rat value;
  };
  std::vector<Candidate> candidates;  // evaluated alternatives, in trial order
  std::string chosen;

  bool complete = true;                 // false when an enumeration budget was hit
  std::int64_t configs_enumerated = 0;  // ptas: feasible configurations evaluated
  std::int64_t configs_with_residual = 0;
};

/// Theta = sum_t delta_t / (sum_{tau>=t} delta_tau); the harmonic number H_T
/// for unit multipliers. Governs the guarantee of algorithm a.
Rat compute_theta(const std::vector<Rat>& multipliers);

/// For each period t, packs one knapsack solution at capacity c_t from t
/// through the horizon and keeps the best weighted candidate. eps = 0 solves
/// each knapsack exactly (the a* variant), eps in (0,1) uses the
/// approximation scheme. Guarantee: (1-eps)/Theta.
AlgoOutput alg_a(const Instance& inst, const Rat& eps);

/// T+1 candidates on a residual problem: the rounded-down residual LP and,
/// for each period t, an approximate knapsack over the items available at t
/// packed from t onward. Guarantee: (1-eps)/T. Requires eps in (0,1).
AlgoOutput alg_a_prime(const ResidualInstance& res, const Rat& eps);

/// Approximation scheme: guesses the k = min(n, ceil(T/eps)) items with the
/// largest profit contributions together with their start periods, completes
/// each guess with alg_a_prime on the residual problem, and returns the best
/// solution found. Guarantee: (1-eps) of the optimum.
AlgoOutput ptas_approx(const Instance& inst, const Rat& eps,
                       std::int64_t config_budget = 20'000'000);

/// Split-item heuristic for weight-constrained instances (w_i <= c_1),
/// independent of the multipliers. Guarantee: 1/2.
AlgoOutput h1(const Instance& inst);

/// Forward greedy: exact knapsack per period over the not-yet-packed items at
/// the residual capacity. Guarantee: sum(delta_t) / sum(delta_t * t).
AlgoOutput h2(const Instance& inst);

/// Backward variant of h2, starting from the last period and restricting each
/// earlier knapsack to the items packed after it. No guarantee (known
/// counterexample family); kept for comparison runs.
AlgoOutput h2_backward(const Instance& inst);

/// Two-period algorithm: decomposes the optimal solutions of both period
/// knapsacks and returns the best of three feasible combinations.
/// Guarantee: (1+3d+2d^2)/(1+4d+2d^2) with d = delta_2/delta_1, scaled by
/// (1-eps) when eps > 0 selects the approximation scheme for the knapsacks.
AlgoOutput ht2(const Instance& inst, const Rat& eps = Rat(0));

/// The five-way decomposition behind ht2: common items, rest of Sol(KP_1),
/// then Sol(KP_2) \ common scanned in ascending id order splits into the part
/// fitting c_1 on top of the common items, the first overflowing item, and
/// the remainder.
struct Ht2Subsets {
  std::vector<int> s12;
  std::vector<int> s1;
  std::vector<int> s2a;
  std::vector<int> s2_prime;  // empty or a single item
  std::vector<int> s2b;
};

Ht2Subsets ht2_subsets(const KpSolution& sol1, const KpSolution& sol2, const Rat& c1,
                       const Instance& inst);

/// Closed-form ht2 guarantee as a function of d = delta_2/delta_1.
Rat ht2_guarantee(const Rat& delta_ratio);

/// Dispatch by name: "astar", "a:<eps>", "aprime:<eps>" (run on the canonical
/// residual embedding), "ptas:<eps>", "h1", "h2", "h2b", "ht2", "ht2:<eps>".
/// Epsilons are rationals like "3/10". Throws Error{parse_error} on unknown
/// specs.
AlgoOutput run_algorithm(const Instance& inst, const std::string& spec);

}  // namespace iklab

#endif  // IKLAB_ALGORITHMS_HPP
