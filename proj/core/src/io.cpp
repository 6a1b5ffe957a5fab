#include "iklab/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "iklab/errors.hpp"

namespace iklab {

using nlohmann::json;

json rat_json(const Rat& r) {
  if (rat_den(r) == 1) {
    const Int& n = rat_num(r);
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max())
      return json(n.template convert_to<std::int64_t>());
  }
  return json(rat_str(r));
}

Rat json_rat(const json& value) {
  if (value.is_number_integer()) return Rat(value.get<std::int64_t>());
  if (value.is_string()) {
    auto parsed = rat_parse(value.get<std::string>());
    if (parsed) return *parsed;
    throw Error(Errc::parse_error, "not a rational: '" + value.get<std::string>() + "'");
  }
  if (value.is_number_float())
    throw Error(Errc::parse_error,
                "floating-point numbers are not accepted; write rationals as \"p/q\"");
  throw Error(Errc::parse_error, "expected an integer or a \"p/q\" string");
}

namespace {

json rat_array(const std::vector<Rat>& values) {
  json arr = json::array();
  for (const Rat& v : values) arr.push_back(rat_json(v));
  return arr;
}

std::vector<Rat> parse_rat_array(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array())
    throw Error(Errc::parse_error, std::string("missing array '") + key + "'");
  std::vector<Rat> out;
  for (const json& v : doc[key]) out.push_back(json_rat(v));
  return out;
}

json schedule_json(const Schedule& s) {
  json arr = json::array();
  for (int st : s.start) {
    if (st == kNever)
      arr.push_back(nullptr);
    else
      arr.push_back(st + 1);  // periods are 1-based on disk
  }
  return arr;
}

}  // namespace

std::string serialize_instance(const InstanceFile& file) {
  json doc;
  doc["version"] = file.version;
  doc["profits"] = rat_array(file.instance.profits);
  doc["weights"] = rat_array(file.instance.weights);
  doc["capacities"] = rat_array(file.instance.capacities);
  doc["multipliers"] = rat_array(file.instance.multipliers);
  json meta = json::object();
  if (!file.name.empty()) meta["name"] = file.name;
  if (!file.family.empty()) meta["family"] = file.family;
  if (!file.parameters_json.empty()) meta["parameters"] = json::parse(file.parameters_json);
  if (!meta.empty()) doc["meta"] = meta;
  return doc.dump(2) + "\n";
}

InstanceFile parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
  InstanceFile file;
  file.version = doc.value("version", 1);
  if (file.version != 1)
    throw Error(Errc::parse_error, "unsupported version " + std::to_string(file.version));
  Instance inst;
  inst.profits = parse_rat_array(doc, "profits");
  inst.weights = parse_rat_array(doc, "weights");
  inst.capacities = parse_rat_array(doc, "capacities");
  inst.multipliers = parse_rat_array(doc, "multipliers");
  file.instance = validate_instance(std::move(inst));
  if (doc.contains("meta")) {
    const json& meta = doc["meta"];
    file.name = meta.value("name", "");
    file.family = meta.value("family", "");
    if (meta.contains("parameters")) file.parameters_json = meta["parameters"].dump();
  }
  return file;
}

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::file_not_found, path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

void write_instance_file(const std::string& path, const InstanceFile& file) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::file_not_found, "cannot write " + path);
  out << serialize_instance(file);
}

json run_report_json(const RunReport& report) {
  json doc;
  doc["instance"] = report.instance_id;
  json entries = json::array();
  for (const RunEntry& e : report.entries) {
    json entry;
    entry["algorithm"] = e.algorithm;
    entry["value"] = rat_json(e.value);
    entry["value_approx"] = rat_double(e.value);
    entry["schedule"] = schedule_json(e.schedule);
    if (e.guaranteed_ratio) entry["guaranteed_ratio"] = rat_json(*e.guaranteed_ratio);
    entry["wall_ms"] = e.wall_ms;
    entry["complete"] = e.complete;
    entries.push_back(entry);
  }
  doc["runs"] = entries;
  if (report.oracle_value) {
    doc["oracle"] = rat_json(*report.oracle_value);
    doc["oracle_optimal"] = report.oracle_optimal;
  }
  if (!report.ratios.empty()) doc["ratios"] = ratio_reports_json(report.ratios);
  return doc;
}

std::string run_report_table(const RunReport& report) {
  std::ostringstream out;
  out << "instance: " << report.instance_id << "\n";
  out << std::left << std::setw(10) << "algorithm" << std::setw(24) << "value" << std::setw(14)
      << "value~" << std::setw(16) << "guarantee" << std::setw(10) << "wall_ms"
      << "\n";
  for (const RunEntry& e : report.entries) {
    out << std::left << std::setw(10) << e.algorithm << std::setw(24) << rat_str(e.value)
        << std::setw(14) << rat_double(e.value) << std::setw(16)
        << (e.guaranteed_ratio ? rat_str(*e.guaranteed_ratio) : std::string("-"))
        << std::setw(10) << e.wall_ms << (e.complete ? "" : "  (budget hit)") << "\n";
  }
  if (report.oracle_value)
    out << "oracle:   " << rat_str(*report.oracle_value) << " ("
        << rat_double(*report.oracle_value) << (report.oracle_optimal ? ")" : ", budget hit)")
        << "\n";
  for (const RatioReport& r : report.ratios) {
    out << "ratio[" << r.algorithm << "]: achieved " << rat_str(r.achieved_ratio) << " ~ "
        << rat_double(r.achieved_ratio) << ", guaranteed " << rat_str(r.guaranteed_ratio)
        << (r.guarantee_satisfied ? " (ok)" : " (VIOLATED)") << "\n";
  }
  return out.str();
}

json certificate_json(const CertificateReport& report) {
  json doc;
  doc["model"] = report.model;
  json primal = json::object();
  for (const auto& [name, value] : report.primal_values) primal[name] = rat_json(value);
  json dual = json::object();
  for (const auto& [name, value] : report.dual_values) dual[name] = rat_json(value);
  doc["primal"] = primal;
  doc["dual"] = dual;
  doc["max_primal_violation"] = rat_json(report.max_primal_violation);
  doc["max_dual_violation"] = rat_json(report.max_dual_violation);
  doc["primal_objective"] = rat_json(report.primal_objective);
  doc["dual_objective"] = rat_json(report.dual_objective);
  doc["gap"] = rat_json(report.gap);
  doc["certified_ratio"] = rat_json(report.certified_ratio);
  doc["certified_ratio_approx"] = rat_double(report.certified_ratio);
  doc["verified"] = report.verified;
  if (!report.offending.empty()) doc["offending"] = report.offending;
  return doc;
}

json ratio_reports_json(const std::vector<RatioReport>& reports) {
  json arr = json::array();
  for (const RatioReport& r : reports) {
    json entry;
    entry["algorithm"] = r.algorithm;
    entry["value"] = rat_json(r.value);
    entry["reference"] = rat_json(r.reference_value);
    entry["achieved_ratio"] = rat_json(r.achieved_ratio);
    entry["achieved_ratio_approx"] = rat_double(r.achieved_ratio);
    entry["guaranteed_ratio"] = rat_json(r.guaranteed_ratio);
    entry["guarantee_satisfied"] = r.guarantee_satisfied;
    arr.push_back(entry);
  }
  return arr;
}

}  // namespace iklab
