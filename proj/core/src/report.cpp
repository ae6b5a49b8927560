#include "jordanc/report.hpp"

#include <sstream>

namespace jordanc {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "?";
}

ReportEntry& VerificationReport::add(std::string check_id, std::vector<std::string> inputs, nlohmann::json expected,
                                     nlohmann::json measured, Status status) {
  entries.push_back({std::move(check_id), std::move(inputs), std::move(expected), std::move(measured), status});
  return entries.back();
}

ReportEntry& VerificationReport::check(std::string check_id, std::vector<std::string> inputs,
                                       nlohmann::json expected, nlohmann::json measured, bool ok) {
  return add(std::move(check_id), std::move(inputs), std::move(expected), std::move(measured),
             ok ? Status::Pass : Status::Fail);
}

void VerificationReport::append(const VerificationReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

int VerificationReport::count(Status s) const {
  int n = 0;
  for (const auto& e : entries)
    if (e.status == s) ++n;
  return n;
}

nlohmann::json VerificationReport::to_json(bool include_wall_time) const {
  nlohmann::json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["tolerances"] = tolerances;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries) {
    j["entries"].push_back({{"check_id", e.check_id},
                            {"inputs", e.inputs},
                            {"expected", e.expected},
                            {"measured", e.measured},
                            {"status", to_string(e.status)}});
  }
  j["summary"] = {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)}, {"info", count(Status::Info)}};
  if (include_wall_time) j["wall_time"] = wall_time;
  return j;
}

namespace {

std::string cell(const nlohmann::json& v) {
  if (v.is_null()) return "";
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  std::string out;
  for (char c : s) {
    if (c == '|')
      out += "\\|";
    else
      out += c;
  }
  return out;
}

}  // namespace

std::string VerificationReport::to_markdown() const {
  std::ostringstream os;
  os << "# " << suite << "\n\n";
  os << "seed " << seed << ", tolerances " << tolerances.dump() << "\n\n";
  os << "| check | inputs | expected | measured | status |\n";
  os << "|---|---|---|---|---|\n";
  for (const auto& e : entries) {
    std::string inputs;
    for (std::size_t i = 0; i < e.inputs.size(); ++i) inputs += (i ? ", " : "") + e.inputs[i];
    os << "| " << e.check_id << " | " << inputs << " | " << cell(e.expected) << " | " << cell(e.measured) << " | "
       << to_string(e.status) << " |\n";
  }
  os << "\n" << count(Status::Pass) << " pass, " << count(Status::Fail) << " fail, " << count(Status::Info)
     << " info\n";
  return os.str();
}

}  // namespace jordanc
