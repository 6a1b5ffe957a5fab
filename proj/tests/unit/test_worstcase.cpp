#include <doctest.h>

#include <cmath>

#include "iklab/algorithms.hpp"
#include "iklab/errors.hpp"
#include "iklab/oracle.hpp"
#include "iklab/random_instances.hpp"
#include "iklab/worstcase.hpp"

using namespace iklab;

TEST_CASE("astar family reproduces the three-period worked example") {
  Instance inst = gen_tight_astar({Rat(1), Rat(1), Rat(1)});
  CHECK(inst.num_items() == 6);
  CHECK(inst.capacities == std::vector<Rat>{Rat(2), Rat(3), Rat(6)});
  for (const Rat& p : inst.profits) CHECK(p == Rat(1));
  CHECK(astar_family_optimum({Rat(1), Rat(1), Rat(1)}) == Rat(11));
}

TEST_CASE("astar family degenerates to one item for a single period") {
  Instance inst = gen_tight_astar({Rat(1)});
  CHECK(inst.num_items() == 1);
  CHECK(inst.capacities == std::vector<Rat>{Rat(1)});
  RatioReport report = run_ratio_case(inst, "astar", astar_family_optimum({Rat(1)}));
  CHECK(report.achieved_ratio == Rat(1));
}

TEST_CASE("astar family is exactly tight for two unit periods") {
  Instance inst = gen_tight_astar({Rat(1), Rat(1)});
  CHECK(inst.num_items() == 2);
  CHECK(inst.capacities == std::vector<Rat>{Rat(1), Rat(2)});
  AlgoOutput out = alg_a(inst, Rat(0));
  OracleResult oracle = solve_exact(inst);
  CHECK(oracle.value == Rat(3));
  CHECK(out.value / oracle.value == Rat(2, 3));  // 1/Theta at Theta = 3/2
}

TEST_CASE("astar family handles multipliers that need rescaling") {
  std::vector<Rat> mult{Rat(2), Rat(3)};
  Instance inst = gen_tight_astar(mult);
  CHECK(inst.capacities == std::vector<Rat>{Rat(3), Rat(5)});
  CHECK(inst.num_items() == 5);
  OracleResult oracle = solve_exact(inst);
  CHECK(oracle.value == astar_family_optimum(mult));
  AlgoOutput out = alg_a(inst, Rat(0));
  CHECK(out.value / oracle.value == Rat(1) / compute_theta(mult));
}

TEST_CASE("astar family: every per-period candidate has the same value") {
  for (auto mult : {std::vector<Rat>{Rat(1), Rat(2), Rat(3)},
                    std::vector<Rat>{Rat(1, 2), Rat(1, 3)},
                    std::vector<Rat>{Rat(2), Rat(3), Rat(1)}}) {
    Instance inst = gen_tight_astar(mult);
    AlgoOutput out = alg_a(inst, Rat(0));
    for (const auto& c : out.candidates) CHECK(c.value == out.value);
    // Progressive fill is optimal on this family.
    std::optional<Rat> opt = astar_family_optimum(mult);
    OracleResult oracle = solve_exact(inst);
    CHECK(oracle.value == *opt);
  }
}

TEST_CASE("h1 family ratio follows the closed form") {
  std::vector<Rat> mult{Rat(1), Rat(1)};
  RatioReport report = run_ratio_case(gen_tight_h1(100, mult, Rat(1, 1000)), "h1",
                                      h1_family_optimum(100, mult));
  CHECK(report.achieved_ratio == Rat(53, 100));  // 1/2 + (T+1)/M
  CHECK(report.guarantee_satisfied);

  std::vector<Rat> mult3{Rat(1), Rat(1), Rat(1)};
  RatioReport big = run_ratio_case(gen_tight_h1(1000000, mult3, Rat(1, 1000)), "h1",
                                   h1_family_optimum(1000000, mult3));
  CHECK(std::abs(rat_double(big.achieved_ratio) - 0.5) < 1e-5);
}

TEST_CASE("h1 family optimum ignores the multipliers") {
  for (auto mult : {std::vector<Rat>{Rat(1), Rat(3)}, std::vector<Rat>{Rat(5), Rat(1, 2)}}) {
    Instance inst = gen_tight_h1(60, mult, Rat(1, 100));
    OracleResult oracle = solve_exact(inst);
    CHECK(oracle.value == h1_family_optimum(60, mult));
    // Optimal packing uses items 1 and 3 from the first period.
    CHECK(oracle.schedule.start == std::vector<int>{0, kNever, 0});
  }
}

TEST_CASE("h2 family ratio tends to the multiplier-weighted bound") {
  std::vector<Rat> unit3(3, Rat(1));
  Instance inst = gen_tight_h2(100000, unit3);
  AlgoOutput out = h2(inst);
  Rat ratio = out.value / h2_family_optimum(100000, unit3);
  CHECK(std::abs(rat_double(ratio) - 0.5) < 1e-4);  // 2/(T+1) at T = 3

  // Front-loaded small multipliers push the ratio toward 1/T.
  std::vector<Rat> worst{Rat(1, 1000), Rat(1, 1000), Rat(1, 1000), Rat(1)};
  Instance skew = gen_tight_h2(2000, worst);
  AlgoOutput run = h2(skew);
  Rat skew_ratio = run.value / h2_family_optimum(2000, worst);
  CHECK(std::abs(rat_double(skew_ratio) - 0.25) < 0.01);
}

TEST_CASE("h2 family small case matches the oracle") {
  std::vector<Rat> unit2(2, Rat(1));
  Instance inst = gen_tight_h2(100, unit2);
  OracleResult oracle = solve_exact(inst);
  CHECK(oracle.value == Rat(300));
  CHECK(oracle.value == h2_family_optimum(100, unit2));
}

TEST_CASE("backward counterexample family crosses its thresholds") {
  Rat g(1, 1000);
  RatioReport at10 = run_ratio_case(gen_backward_counterexample(10, g), "h2b",
                                    backward_family_optimum(10));
  CHECK(at10.achieved_ratio < Rat(1, 2));
  CHECK(at10.value == backward_family_value(10, g));

  RatioReport at1000 = run_ratio_case(gen_backward_counterexample(1000, g), "h2b",
                                      backward_family_optimum(1000));
  CHECK(std::abs(rat_double(at1000.achieved_ratio) - 1.0 / 3.0) < 1e-2);
  CHECK(at1000.value == backward_family_value(1000, g));
}

TEST_CASE("backward counterexample small case agrees with the oracle") {
  Instance inst = gen_backward_counterexample(4, Rat(1, 100));
  OracleResult oracle = solve_exact(inst);
  CHECK(oracle.value == backward_family_optimum(4));
}

TEST_CASE("generated families pass validation and the weight constraint") {
  CHECK(is_weight_constrained(gen_tight_astar({Rat(1), Rat(2)})));
  CHECK(is_weight_constrained(gen_tight_h1(50, {Rat(1), Rat(1)}, Rat(1, 10))));
  CHECK(is_weight_constrained(gen_tight_h2(50, {Rat(1), Rat(1)})));
  CHECK(is_weight_constrained(gen_backward_counterexample(5, Rat(1, 10))));
  CHECK(is_weight_constrained(gen_tight_ht2(Rat(1), Rat(3), Rat(1, 10))));
}

TEST_CASE("generators validate their parameters") {
  CHECK_THROWS_AS(gen_tight_h1(4, {Rat(1), Rat(1)}, Rat(1, 10)), Error);
  CHECK_THROWS_AS(gen_tight_h1(100, {Rat(1)}, Rat(2)), Error);
  CHECK_THROWS_AS(gen_tight_h2(2, {Rat(1), Rat(1), Rat(1)}), Error);
  CHECK_THROWS_AS(gen_backward_counterexample(2, Rat(1, 10)), Error);
  CHECK_THROWS_AS(gen_tight_ht2(Rat(1), Rat(1), Rat(2)), Error);
  CHECK_THROWS_AS(gen_tight_ht2(Rat(0), Rat(1), Rat(1, 10)), Error);
}

TEST_CASE("astar duality certificate matches the worked example") {
  CertificateReport report = verify_duality_astar({Rat(1), Rat(1), Rat(1)}, Rat(11));
  CHECK(report.verified);
  CHECK(report.gap == Rat(0));
  CHECK(report.max_primal_violation == Rat(0));
  CHECK(report.max_dual_violation == Rat(0));
  CHECK(report.primal_objective == Rat(6));
  CHECK(report.primal_values[0] == std::pair<std::string, Rat>{"h^A", Rat(6)});
  CHECK(report.primal_values[1].second == Rat(2));
  CHECK(report.primal_values[2].second == Rat(3));
  CHECK(report.primal_values[3].second == Rat(6));
  CHECK(report.dual_values[0].second == Rat(2, 11));
  CHECK(report.dual_values[1].second == Rat(3, 11));
  CHECK(report.dual_values[2].second == Rat(6, 11));
  CHECK(report.dual_values[3].second == Rat(6, 11));
  CHECK(report.certified_ratio == Rat(6, 11));
}

TEST_CASE("astar duality certificate for a single period") {
  CertificateReport report = verify_duality_astar({Rat(1)}, Rat(1));
  CHECK(report.verified);
  CHECK(report.primal_objective == Rat(1));
  CHECK(report.certified_ratio == Rat(1));
}

TEST_CASE("astar duality certificate holds on random rational multipliers") {
  Rng rng(424242);
  for (int round = 0; round < 60; ++round) {
    int periods = static_cast<int>(rng.uniform(2, 6));
    std::vector<Rat> mult;
    for (int t = 0; t < periods; ++t)
      mult.push_back(Rat(rng.uniform(1, 12), rng.uniform(1, 12)));
    Rat opt(rng.uniform(1, 100), rng.uniform(1, 10));
    CertificateReport report = verify_duality_astar(mult, opt);
    CHECK(report.verified);
    CHECK(report.gap == Rat(0));
    CHECK(report.certified_ratio == Rat(1) / compute_theta(mult));
  }
}

TEST_CASE("ht2 duality certificate matches the unit-ratio closed forms") {
  CertificateReport report = verify_duality_ht2(Rat(1), Rat(1), Rat(7));
  CHECK(report.verified);
  CHECK(report.primal_objective == Rat(6));
  CHECK(report.dual_values[0].second == Rat(3, 7));
  CHECK(report.dual_values[1].second == Rat(2, 7));
  CHECK(report.dual_values[2].second == Rat(2, 7));
  CHECK(report.dual_values[3].second == Rat(6, 7));
  CHECK(report.certified_ratio == Rat(6, 7));
}

TEST_CASE("ht2 duality certificate holds across the ratio grid") {
  for (int num = 1; num <= 100; ++num) {
    Rat dr(num, 10);
    CertificateReport report = verify_duality_ht2(Rat(1), dr, Rat(5, 3));
    CHECK(report.verified);
    CHECK(report.certified_ratio == ht2_guarantee(dr));
    // Scaling both multipliers leaves the certificate intact.
    CertificateReport scaled = verify_duality_ht2(Rat(3, 2), dr * Rat(3, 2), Rat(5, 3));
    CHECK(scaled.verified);
    CHECK(scaled.certified_ratio == ht2_guarantee(dr));
  }
}

TEST_CASE("ht2 duality certificate supports the epsilon variant") {
  CertificateReport report = verify_duality_ht2(Rat(1), Rat(1), Rat(7), Rat(1, 10));
  CHECK(report.verified);
  CHECK(report.certified_ratio == Rat(6, 7) * Rat(9, 10));
}

TEST_CASE("certificate checks reject invalid parameters") {
  CHECK_THROWS_AS(verify_duality_astar({}, Rat(1)), Error);
  CHECK_THROWS_AS(verify_duality_astar({Rat(1)}, Rat(0)), Error);
  CHECK_THROWS_AS(verify_duality_ht2(Rat(1), Rat(1), Rat(1), Rat(1)), Error);
}

TEST_CASE("ratio sweeps cover the tight families") {
  SweepPoint p;
  p.multipliers = {Rat(1), Rat(1), Rat(1)};
  std::vector<RatioReport> astar = ratio_sweep(Family::astar, {p}, "astar");
  REQUIRE(astar.size() == 1);
  CHECK(astar[0].achieved_ratio == Rat(6, 11));
  CHECK(astar[0].guaranteed_ratio == Rat(6, 11));
  CHECK(astar[0].guarantee_satisfied);

  SweepPoint h1p;
  h1p.multipliers = {Rat(1), Rat(1)};
  h1p.m = 1000000;
  h1p.delta = Rat(1, 1000);
  std::vector<RatioReport> h1r = ratio_sweep(Family::h1, {h1p}, "h1");
  CHECK(std::abs(rat_double(h1r[0].achieved_ratio) - 0.5) < 1e-5);

  std::vector<SweepPoint> ht2_grid;
  for (Rat dr : {Rat(1, 2), Rat(1), Rat(2)}) {
    SweepPoint q;
    q.delta1 = Rat(1);
    q.delta2 = dr;
    q.gamma = Rat(1, 10000);
    ht2_grid.push_back(q);
  }
  std::vector<RatioReport> ht2r = ratio_sweep(Family::ht2, ht2_grid, "ht2");
  REQUIRE(ht2r.size() == 3);
  for (std::size_t i = 0; i < ht2r.size(); ++i) {
    CHECK(ht2r[i].guarantee_satisfied);
    double formula = rat_double(ht2_guarantee(ht2_grid[i].delta2));
    CHECK(std::abs(rat_double(ht2r[i].achieved_ratio) - formula) < 1e-3);
  }
}

TEST_CASE("tightness: the ht2 family ratio approaches its guarantee from above") {
  Rat prev_gap;
  bool first = true;
  for (Rat gamma : {Rat(1, 10), Rat(1, 100), Rat(1, 1000), Rat(1, 10000)}) {
    Instance inst = gen_tight_ht2(Rat(1), Rat(1), gamma);
    RatioReport report =
        run_ratio_case(inst, "ht2", ht2_family_optimum(Rat(1), Rat(1), gamma));
    CHECK(report.achieved_ratio >= Rat(6, 7));
    Rat gap = report.achieved_ratio - Rat(6, 7);
    if (!first) CHECK(gap < prev_gap);
    prev_gap = gap;
    first = false;
  }
}
