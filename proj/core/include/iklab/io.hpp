#ifndef IKLAB_IO_HPP
#define IKLAB_IO_HPP

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "iklab/algorithms.hpp"
#include "iklab/instance.hpp"
#include "iklab/worstcase.hpp"

namespace iklab {

/// On-disk instance: JSON with keys "version", "profits", "weights",
/// "capacities", "multipliers" and an optional "meta" object. Rationals are
/// written as integers when possible, otherwise "p/q" strings; parsing
/// rejects floating-point numbers so files round-trip bit-exactly.
struct InstanceFile {
  int version = 1;
  Instance instance;
  std::string name;    // optional metadata
  std::string family;  // optional metadata
  std::string parameters_json;  // optional metadata, free-form JSON object text
};

std::string serialize_instance(const InstanceFile& file);
InstanceFile parse_instance(const std::string& text);

/// Throws Error{file_not_found, parse_error}.
InstanceFile read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const InstanceFile& file);

/// One algorithm run inside a report.
struct RunEntry {
  std::string algorithm;
  Rat value;
  Schedule schedule;
  std::optional<Rat> guaranteed_ratio;
  double wall_ms = 0.0;
  bool complete = true;
};

struct RunReport {
  std::string instance_id;
  std::vector<RunEntry> entries;
  std::optional<Rat> oracle_value;
  bool oracle_optimal = true;
  std::vector<RatioReport> ratios;
};

nlohmann::json run_report_json(const RunReport& report);
std::string run_report_table(const RunReport& report);

nlohmann::json certificate_json(const CertificateReport& report);
nlohmann::json ratio_reports_json(const std::vector<RatioReport>& reports);

/// JSON <-> Rat helpers shared by the readers above.
nlohmann::json rat_json(const Rat& r);
Rat json_rat(const nlohmann::json& value);  // throws Error{parse_error}

}  // namespace iklab

#endif  // IKLAB_IO_HPP
