#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "iklab/algorithms.hpp"
#include "iklab/errors.hpp"
#include "iklab/oracle.hpp"
#include "iklab/random_instances.hpp"
#include "iklab/worstcase.hpp"

using namespace iklab;

namespace {

Instance make(std::vector<Rat> p, std::vector<Rat> w, std::vector<Rat> c, std::vector<Rat> d) {
  Instance inst;
  inst.profits = std::move(p);
  inst.weights = std::move(w);
  inst.capacities = std::move(c);
  inst.multipliers = std::move(d);
  return validate_instance(std::move(inst));
}

Instance unit_six() {
  return make(std::vector<Rat>(6, 1), std::vector<Rat>(6, 1), {Rat(2), Rat(3), Rat(6)},
              {Rat(1), Rat(1), Rat(1)});
}

Rat harmonic(int t) {
  Rat h = 0;
  for (int k = 1; k <= t; ++k) h += Rat(1, k);
  return h;
}

}  // namespace

TEST_CASE("compute_theta matches hand values") {
  CHECK(compute_theta({Rat(1), Rat(1), Rat(1)}) == Rat(11, 6));
  CHECK(compute_theta({Rat(1)}) == Rat(1));
  CHECK(compute_theta({Rat(1), Rat(2)}) == Rat(4, 3));
}

TEST_CASE("compute_theta on unit multipliers is the harmonic number") {
  for (int t = 1; t <= 12; ++t)
    CHECK(compute_theta(std::vector<Rat>(t, Rat(1))) == harmonic(t));
}

TEST_CASE("alg_a with exact knapsacks reproduces the worked example") {
  AlgoOutput out = alg_a(unit_six(), Rat(0));
  CHECK(out.value == Rat(6));
  CHECK(out.candidates.size() == 3);
  for (const auto& c : out.candidates) CHECK(c.value == Rat(6));  // 3*2 = 2*3 = 6
  CHECK(*out.guaranteed_ratio == Rat(6, 11));
}

TEST_CASE("alg_a with one period is the exact knapsack") {
  Instance inst = make({Rat(3), Rat(4)}, {Rat(2), Rat(3)}, {Rat(5)}, {Rat(2)});
  AlgoOutput out = alg_a(inst, Rat(0));
  CHECK(out.value == Rat(14));
  CHECK(*out.guaranteed_ratio == Rat(1));
}

TEST_CASE("alg_a dominates each per-period candidate and meets its guarantee") {
  Rng rng(271828);
  RandomSpec spec;
  spec.n_min = 3;
  spec.n_max = 9;
  spec.t_min = 2;
  spec.t_max = 3;
  spec.unit_multipliers = false;
  for (int round = 0; round < 25; ++round) {
    Instance inst = random_instance(rng, spec);
    OracleResult oracle = solve_exact(inst);
    REQUIRE(oracle.optimal);
    for (Rat eps : {Rat(0), Rat(1, 4)}) {
      AlgoOutput out = alg_a(inst, eps);
      CHECK(evaluate(inst, out.schedule) == out.value);
      for (const auto& c : out.candidates) CHECK(out.value >= c.value);
      CHECK(out.value >= *out.guaranteed_ratio * oracle.value);
    }
  }
}

TEST_CASE("alg_a_prime never loses to alg_a on the canonical embedding") {
  Rng rng(161803);
  RandomSpec spec;
  spec.n_min = 2;
  spec.n_max = 7;
  spec.t_min = 2;
  spec.t_max = 3;
  spec.weight_constrained = true;
  for (int round = 0; round < 15; ++round) {
    Instance inst = random_instance(rng, spec);
    ResidualInstance res = full_residual(inst);
    Rat eps(1, 4);
    CHECK(alg_a_prime(res, eps).value >= alg_a(inst, eps).value);
  }
}

TEST_CASE("alg_a_prime on an empty surviving set returns zero") {
  Instance inst = make({Rat(1)}, {Rat(10)}, {Rat(1), Rat(2)}, {Rat(1), Rat(1)});
  ResidualInstance res;
  res.parent = inst;
  res.residual_capacities = {Rat(1), Rat(2)};
  res = validate_residual(res);  // no survivors listed
  AlgoOutput out = alg_a_prime(res, Rat(1, 2));
  CHECK(out.value == Rat(0));
}

TEST_CASE("alg_a_prime meets (1-eps)/T against the residual oracle") {
  Rng rng(577215);
  RandomSpec spec;
  spec.n_min = 3;
  spec.n_max = 8;
  spec.t_min = 2;
  spec.t_max = 3;
  for (int round = 0; round < 20; ++round) {
    ResidualInstance res = random_residual(rng, spec);
    OracleResult oracle = solve_exact(res);
    REQUIRE(oracle.optimal);
    for (Rat eps : {Rat(1, 4), Rat(1, 2)}) {
      AlgoOutput out = alg_a_prime(res, eps);
      Rat rho = (Rat(1) - eps) / res.parent.num_periods();
      CHECK(out.value >= rho * oracle.value);
      CHECK(evaluate(res.parent, out.schedule) == out.value);
    }
  }
}

TEST_CASE("ptas is exact when the guess covers every item") {
  Rng rng(141421);
  RandomSpec spec;
  spec.n_min = 3;
  spec.n_max = 5;
  spec.t_min = 2;
  spec.t_max = 2;
  for (int round = 0; round < 10; ++round) {
    Instance inst = random_instance(rng, spec);
    // k = min(n, ceil(T/eps)) = n for eps = 1/3 and n <= 6.
    AlgoOutput out = ptas_approx(inst, Rat(1, 3));
    OracleResult oracle = solve_exact(inst);
    REQUIRE(oracle.optimal);
    CHECK(out.value == oracle.value);
  }
}

TEST_CASE("ptas meets its (1-eps) guarantee on random instances") {
  Rng rng(173205);
  RandomSpec spec;
  spec.n_min = 5;
  spec.n_max = 8;
  spec.t_min = 2;
  spec.t_max = 2;
  for (int round = 0; round < 12; ++round) {
    Instance inst = random_instance(rng, spec);
    OracleResult oracle = solve_exact(inst);
    REQUIRE(oracle.optimal);
    AlgoOutput out = ptas_approx(inst, Rat(1, 2));
    CHECK(out.complete);
    CHECK(out.value >= (Rat(1) - Rat(1, 2)) * oracle.value);
    CHECK(evaluate(inst, out.schedule) == out.value);
  }
}

TEST_CASE("ptas enumeration count matches the closed form when nothing binds") {
  // Four items, huge capacities: every subset of size <= k with every start
  // assignment is feasible, so leaves = sum_j C(4,j) * T^j for j <= k.
  Instance inst = make({Rat(1), Rat(2), Rat(3), Rat(4)}, {Rat(1), Rat(1), Rat(1), Rat(1)},
                       {Rat(100), Rat(100)}, {Rat(1), Rat(1)});
  AlgoOutput out = ptas_approx(inst, Rat(2, 3));  // k = ceil(2/(2/3)) = 3
  CHECK(out.configs_enumerated == 1 + 4 * 2 + 6 * 4 + 4 * 8);
  CHECK(out.configs_with_residual == 4 * 8);
}

TEST_CASE("ptas stops at its configuration budget with an incumbent") {
  Instance inst = make(std::vector<Rat>(6, Rat(1)), std::vector<Rat>(6, Rat(1)),
                       {Rat(6), Rat(6)}, {Rat(1), Rat(1)});
  AlgoOutput out = ptas_approx(inst, Rat(1, 2), 10);
  CHECK_FALSE(out.complete);
  CHECK(out.configs_enumerated == 10);
  CHECK(evaluate(inst, out.schedule) == out.value);
}

TEST_CASE("ptas case analysis holds symbolically on an epsilon grid") {
  for (int periods = 1; periods <= 6; ++periods) {
    for (int num = 1; num < 20; ++num) {
      Rat eps(num, 20);
      Rat rho = (Rat(1) - eps) / periods;
      Rat f = (Rat(1) - rho - eps) / (Rat(1) - rho);
      if (periods >= 2) CHECK(f > 0);  // T = 1 collapses to f = 0
      CHECK(f < 1);
      // Case 1 bound.
      CHECK((Rat(1) - rho) * f + rho >= Rat(1) - eps);
      // Case 2 bound with k = ceil(T/eps).
      Rat k(rat_ceil(Rat(periods) / eps));
      CHECK(Rat(1) - Rat(periods) / k * f >= Rat(1) - eps * f);
      CHECK(Rat(1) - eps * f >= Rat(1) - eps);
    }
  }
}

TEST_CASE("h1 on its tight family keeps only the split item") {
  Instance inst = gen_tight_h1(100, {Rat(1), Rat(1)}, Rat(1, 1000));
  AlgoOutput out = h1(inst);
  CHECK(out.value == Rat(106));  // item 2 in both periods
  OracleResult oracle = solve_exact(inst);
  CHECK(oracle.value == Rat(200));
  CHECK(out.value / oracle.value == Rat(53, 100));  // 1/2 + (T+1)/M
}

TEST_CASE("h1 packs a single item in the first period") {
  Instance inst = make({Rat(5)}, {Rat(2)}, {Rat(3), Rat(4)}, {Rat(1), Rat(1)});
  AlgoOutput out = h1(inst);
  CHECK(out.schedule.start == std::vector<int>{0});
  CHECK(out.value == Rat(10));
  CHECK(out.value == solve_exact(inst).value);
}

TEST_CASE("h1 meets the half guarantee on random weight-constrained instances") {
  Rng rng(236067);
  RandomSpec spec;
  spec.n_min = 3;
  spec.n_max = 10;
  spec.t_min = 1;
  spec.t_max = 3;
  spec.weight_constrained = true;
  spec.unit_multipliers = false;
  for (int round = 0; round < 40; ++round) {
    Instance inst = random_instance(rng, spec);
    OracleResult oracle = solve_exact(inst);
    REQUIRE(oracle.optimal);
    AlgoOutput out = h1(inst);
    CHECK(2 * out.value >= oracle.value);
    CHECK(evaluate(inst, out.schedule) == out.value);
  }
}

TEST_CASE("h1 rejects instances with an oversized item") {
  Instance inst = make({Rat(1), Rat(1)}, {Rat(1), Rat(9)}, {Rat(3), Rat(9)}, {Rat(1), Rat(1)});
  try {
    h1(inst);
    FAIL("expected NotWeightConstrained");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_weight_constrained);
  }
}

TEST_CASE("h2 on its tight family gets stuck on the first heavy item") {
  Instance inst = gen_tight_h2(100, {Rat(1), Rat(1)});
  AlgoOutput out = h2(inst);
  CHECK(out.value == Rat(203));  // 2*101 + 1
  OracleResult oracle = solve_exact(inst);
  CHECK(oracle.value == Rat(300));
}

TEST_CASE("h2 with one period is the exact knapsack") {
  Instance inst = make({Rat(3), Rat(4), Rat(5)}, {Rat(2), Rat(3), Rat(4)}, {Rat(6)}, {Rat(1)});
  AlgoOutput out = h2(inst);
  CHECK(out.value == solve_exact(inst).value);
  CHECK(*out.guaranteed_ratio == Rat(1));
}

TEST_CASE("h2 meets its multiplier-weighted guarantee") {
  Rng rng(264338);
  RandomSpec spec;
  spec.n_min = 3;
  spec.n_max = 9;
  spec.t_min = 2;
  spec.t_max = 3;
  spec.weight_constrained = true;
  spec.unit_multipliers = false;
  for (int round = 0; round < 30; ++round) {
    Instance inst = random_instance(rng, spec);
    OracleResult oracle = solve_exact(inst);
    REQUIRE(oracle.optimal);
    AlgoOutput out = h2(inst);
    CHECK(out.value >= *out.guaranteed_ratio * oracle.value);
  }
}

TEST_CASE("h2_backward walks down the counterexample family") {
  Rat g(1, 1000);
  Instance inst = gen_backward_counterexample(10, g);
  AlgoOutput out = h2_backward(inst);
  CHECK(out.value == backward_family_value(10, g));   // (1+g)T + 3 + 2g
  CHECK_FALSE(out.guaranteed_ratio.has_value());
  OracleResult oracle = solve_exact(inst);
  CHECK(oracle.value == Rat(30));  // 3T

  // The family ratio crosses below 1/2 at T = 7 and approaches 1/3.
  Rat prev;
  for (int periods = 3; periods <= 50; ++periods) {
    Instance family = gen_backward_counterexample(periods, g);
    AlgoOutput run = h2_backward(family);
    CHECK(run.value == backward_family_value(periods, g));
    Rat ratio = run.value / backward_family_optimum(periods);
    if (periods >= 7) CHECK(ratio < Rat(1, 2));
    if (periods > 3) CHECK(ratio < prev);
    prev = ratio;
  }
  CHECK(prev - Rat(1, 3) < Rat(1, 20));
}

TEST_CASE("h2_backward with one period is the exact knapsack") {
  Instance inst = make({Rat(3), Rat(4)}, {Rat(2), Rat(3)}, {Rat(5)}, {Rat(1)});
  CHECK(h2_backward(inst).value == solve_exact(inst).value);
}

TEST_CASE("ht2 ties its three candidates on the tight instance") {
  Instance inst = gen_tight_ht2(Rat(1), Rat(1), Rat(1, 100));
  AlgoOutput out = ht2(inst);
  REQUIRE(out.candidates.size() == 3);
  for (const auto& c : out.candidates) CHECK(c.value == Rat(6));
  CHECK(out.value == Rat(6));
  CHECK(*out.guaranteed_ratio == Rat(6, 7));
  OracleResult oracle = solve_exact(inst);
  CHECK(oracle.value == Rat(349, 50));  // 7 - 2/100
}

TEST_CASE("ht2 is optimal when both knapsack solutions coincide") {
  Instance inst = make({Rat(5)}, {Rat(1)}, {Rat(1), Rat(1)}, {Rat(1), Rat(1)});
  AlgoOutput out = ht2(inst);
  CHECK(out.value == Rat(10));
  CHECK(out.value == solve_exact(inst).value);
  CHECK(out.chosen == std::string("a:repeat-kp1"));
}

TEST_CASE("ht2 approaches 15/17 on the second table") {
  Instance inst = gen_tight_ht2(Rat(1), Rat(2), Rat(1, 1000));
  AlgoOutput out = ht2(inst);
  OracleResult oracle = solve_exact(inst);
  double ratio = rat_double(out.value / oracle.value);
  CHECK(std::abs(ratio - 15.0 / 17.0) < 0.03);
}

TEST_CASE("ht2 subset decomposition matches both tightness tables") {
  Rat g(1, 100);
  SUBCASE("delta ratio at most one") {
    Instance inst = gen_tight_ht2(Rat(1), Rat(1), g);
    KpSolution sol1 = kp_exact(make_kp(inst, inst.capacities[0]));
    KpSolution sol2 = kp_exact(make_kp(inst, inst.capacities[1]));
    CHECK(sol1.items == std::vector<int>{0, 2});
    CHECK(sol2.items == std::vector<int>{0, 1});
    Ht2Subsets sub = ht2_subsets(sol1, sol2, inst.capacities[0], inst);
    CHECK(sub.s12 == std::vector<int>{0});
    CHECK(sub.s1 == std::vector<int>{2});
    CHECK(sub.s2a.empty());
    CHECK(sub.s2_prime == std::vector<int>{1});
    CHECK(sub.s2b.empty());
  }
  SUBCASE("delta ratio above one") {
    Instance inst = gen_tight_ht2(Rat(1), Rat(2), g);
    KpSolution sol1 = kp_exact(make_kp(inst, inst.capacities[0]));
    KpSolution sol2 = kp_exact(make_kp(inst, inst.capacities[1]));
    CHECK(sol1.items == std::vector<int>{0});
    CHECK(sol2.items == std::vector<int>{1, 2});
    Ht2Subsets sub = ht2_subsets(sol1, sol2, inst.capacities[0], inst);
    CHECK(sub.s12.empty());
    CHECK(sub.s1 == std::vector<int>{0});
    CHECK(sub.s2a == std::vector<int>{1});
    CHECK(sub.s2_prime == std::vector<int>{2});
    CHECK(sub.s2b.empty());
  }
  SUBCASE("disjoint solutions fitting the first capacity") {
    // Hand-built feasible solutions; the scan never overflows c_1.
    Instance inst = make({Rat(4), Rat(3), Rat(3)}, {Rat(1), Rat(1), Rat(1)}, {Rat(2), Rat(3)},
                         {Rat(1), Rat(1)});
    KpSolution sol1{{0}, Rat(4), Rat(1), true, Rat(0)};
    KpSolution sol2{{1, 2}, Rat(6), Rat(2), true, Rat(0)};
    Ht2Subsets sub = ht2_subsets(sol1, sol2, inst.capacities[0], inst);
    CHECK(sub.s12.empty());
    CHECK(sub.s1 == std::vector<int>{0});
    CHECK(sub.s2a == std::vector<int>{1, 2});
    CHECK(sub.s2_prime.empty());
    CHECK(sub.s2b.empty());
  }
}

TEST_CASE("ht2 meets its guarantee on random two-period instances") {
  Rng rng(327950);
  RandomSpec spec;
  spec.n_min = 3;
  spec.n_max = 9;
  spec.t_min = 2;
  spec.t_max = 2;
  spec.weight_constrained = true;
  spec.unit_multipliers = false;
  for (int round = 0; round < 30; ++round) {
    Instance inst = random_instance(rng, spec);
    OracleResult oracle = solve_exact(inst);
    REQUIRE(oracle.optimal);
    AlgoOutput out = ht2(inst);
    CHECK(out.value >= *out.guaranteed_ratio * oracle.value);
    CHECK(evaluate(inst, out.schedule) == out.value);
  }
}

TEST_CASE("ht2 guarantee has its minimum near sqrt(2)/2") {
  Rat min_value = ht2_guarantee(Rat(1));
  Rat arg_min = Rat(1);
  for (int num = 1; num <= 1000; ++num) {
    Rat value = ht2_guarantee(Rat(num, 100));
    if (value < min_value) {
      min_value = value;
      arg_min = Rat(num, 100);
    }
  }
  double target = 0.5 + std::sqrt(2.0) / 4.0;
  CHECK(std::abs(rat_double(min_value) - target) < 1e-4);
  CHECK(std::abs(rat_double(arg_min) - std::sqrt(2.0) / 2.0) < 0.01);
  CHECK(ht2_guarantee(Rat(1)) == Rat(6, 7));
}

TEST_CASE("ht2 epsilon mode scales the certified guarantee") {
  Instance inst = gen_tight_ht2(Rat(1), Rat(1), Rat(1, 100));
  AlgoOutput out = ht2(inst, Rat(1, 10));
  CHECK(*out.guaranteed_ratio == Rat(6, 7) * Rat(9, 10));
  OracleResult oracle = solve_exact(inst);
  CHECK(out.value >= *out.guaranteed_ratio * oracle.value);
}

TEST_CASE("ht2 rejects horizons other than two periods") {
  Instance inst = unit_six();
  try {
    ht2(inst);
    FAIL("expected NotTwoPeriods");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_two_periods);
  }
}
