#include "mexcrank/report.hpp"

#include <string>

namespace mexcrank::verify {

nlohmann::ordered_json to_json(const Record& record,
                               const std::string& check_id) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : record.params)
    params[name] = std::to_string(value);
  nlohmann::ordered_json j;
  j["check_id"] = check_id;
  j["params"] = std::move(params);
  j["variant"] = record.variant;
  j["relation"] = std::string(to_string(record.relation));
  j["lhs"] = record.lhs.str();
  j["rhs"] = record.rhs.str();
  j["pass"] = record.pass;
  if (record.expected_exception) j["expected_exception"] = true;
  return j;
}

nlohmann::ordered_json to_json(const VerificationReport& report,
                               const IdentityCheck& check,
                               bool include_passing) {
  nlohmann::ordered_json j;
  j["check_id"] = report.check_id;
  j["anchor"] = check.anchor;
  j["pass"] = report.all_passed();
  j["summary"] = {{"total", report.summary.total},
                  {"passed", report.summary.passed},
                  {"failed", report.summary.failed},
                  {"expected_exceptions", report.summary.expected_exceptions}};
  if (const Record* bad = report.first_counterexample())
    j["first_counterexample"] = to_json(*bad, report.check_id);
  else
    j["first_counterexample"] = nullptr;
  auto records = nlohmann::ordered_json::array();
  for (const auto& r : report.records)
    if (include_passing || !r.pass || r.expected_exception)
      records.push_back(to_json(r, report.check_id));
  j["records"] = std::move(records);
  return j;
}

}  // namespace mexcrank::verify
