#include <doctest.h>

#include <nlohmann/json.hpp>

#include "iklab/algorithms.hpp"
#include "iklab/errors.hpp"
#include "iklab/io.hpp"
#include "iklab/random_instances.hpp"

using namespace iklab;

TEST_CASE("rational text round-trips") {
  CHECK(rat_str(Rat(7)) == "7");
  CHECK(rat_str(Rat(-3, 4)) == "-3/4");
  CHECK(rat_parse("7") == Rat(7));
  CHECK(rat_parse("-3/4") == Rat(-3, 4));
  CHECK(rat_parse("6/4") == Rat(3, 2));
  CHECK_FALSE(rat_parse("0.5").has_value());
  CHECK_FALSE(rat_parse("1/0").has_value());
  CHECK_FALSE(rat_parse("x").has_value());
  CHECK_FALSE(rat_parse("").has_value());
}

TEST_CASE("instance files round-trip bit-exactly") {
  Rng rng(8080);
  RandomSpec spec;
  spec.max_denominator = 7;
  spec.unit_multipliers = false;
  for (int round = 0; round < 25; ++round) {
    InstanceFile file;
    file.instance = random_instance(rng, spec);
    file.name = "case-" + std::to_string(round);
    file.family = "random";
    std::string text = serialize_instance(file);
    InstanceFile back = parse_instance(text);
    CHECK(back.instance.profits == file.instance.profits);
    CHECK(back.instance.weights == file.instance.weights);
    CHECK(back.instance.capacities == file.instance.capacities);
    CHECK(back.instance.multipliers == file.instance.multipliers);
    CHECK(back.name == file.name);
    CHECK(serialize_instance(back) == text);
  }
}

TEST_CASE("instance parsing rejects floating-point numbers") {
  std::string text = R"({"version":1,"profits":[0.5],"weights":[1],)"
                     R"("capacities":[1],"multipliers":[1]})";
  try {
    parse_instance(text);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
}

TEST_CASE("instance parsing rejects malformed rationals and missing keys") {
  CHECK_THROWS_AS(parse_instance(R"({"version":1,"profits":["1//2"],"weights":[1],)"
                                 R"("capacities":[1],"multipliers":[1]})"),
                  Error);
  CHECK_THROWS_AS(parse_instance(R"({"version":1,"weights":[1],)"
                                 R"("capacities":[1],"multipliers":[1]})"),
                  Error);
  CHECK_THROWS_AS(parse_instance("not json"), Error);
  CHECK_THROWS_AS(parse_instance(R"({"version":9,"profits":[1],"weights":[1],)"
                                 R"("capacities":[1],"multipliers":[1]})"),
                  Error);
}

TEST_CASE("parsed instances are validated") {
  std::string text = R"({"version":1,"profits":[1],"weights":[1],)"
                     R"("capacities":[3,2],"multipliers":[1,1]})";
  try {
    parse_instance(text);
    FAIL("expected NonMonotoneCapacities");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_monotone_capacities);
  }
}

TEST_CASE("missing files raise FileNotFound") {
  try {
    read_instance_file("/no/such/file.json");
    FAIL("expected FileNotFound");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::file_not_found);
  }
}

TEST_CASE("run reports re-evaluate to their stored values") {
  Rng rng(9090);
  RandomSpec spec;
  spec.weight_constrained = true;
  spec.t_min = 2;
  spec.t_max = 2;
  Instance inst = random_instance(rng, spec);

  RunReport report;
  report.instance_id = "self-consistency";
  for (const char* algo : {"astar", "h1", "h2", "ht2"}) {
    AlgoOutput out = run_algorithm(inst, algo);
    RunEntry entry;
    entry.algorithm = out.algorithm;
    entry.value = out.value;
    entry.schedule = out.schedule;
    entry.guaranteed_ratio = out.guaranteed_ratio;
    report.entries.push_back(entry);
  }
  for (const RunEntry& entry : report.entries)
    CHECK(evaluate(inst, entry.schedule) == entry.value);

  nlohmann::json doc = run_report_json(report);
  CHECK(doc["runs"].size() == 4);
  // Schedules serialize 1-based with nulls for unpacked items.
  for (const auto& run : doc["runs"])
    for (const auto& start : run["schedule"])
      CHECK((start.is_null() || (start.get<int>() >= 1 && start.get<int>() <= 2)));
  CHECK(run_report_table(report).find("astar") != std::string::npos);
}

TEST_CASE("certificate reports serialize their verdict") {
  CertificateReport report = verify_duality_ht2(Rat(1), Rat(2), Rat(3));
  nlohmann::json doc = certificate_json(report);
  CHECK(doc["verified"] == true);
  CHECK(doc["gap"] == 0);
  CHECK(doc["model"] == "ht2");
}
