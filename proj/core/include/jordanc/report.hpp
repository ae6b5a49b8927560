#pragma once

// Verification reports: ordered entries with measured data and a status,
// serialized as a single JSON document or a markdown table.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace jordanc {

enum class Status { Pass, Fail, Info };

std::string to_string(Status s);

struct ReportEntry {
  std::string check_id;
  std::vector<std::string> inputs;
  nlohmann::json expected;  // null when no verdict is asserted
  nlohmann::json measured;
  Status status = Status::Info;
};

struct VerificationReport {
  std::string suite;
  std::vector<ReportEntry> entries;
  std::uint64_t seed = 0;
  nlohmann::json tolerances = nlohmann::json::object();
  double wall_time = 0.0;

  ReportEntry& add(std::string check_id, std::vector<std::string> inputs, nlohmann::json expected,
                   nlohmann::json measured, Status status);
  /// Pass when `ok`, Fail otherwise.
  ReportEntry& check(std::string check_id, std::vector<std::string> inputs, nlohmann::json expected,
                     nlohmann::json measured, bool ok);
  void append(const VerificationReport& other);

  int count(Status s) const;
  bool ok() const { return count(Status::Fail) == 0; }

  /// The canonical payload omits wall_time so reruns compare byte-equal.
  nlohmann::json to_json(bool include_wall_time = true) const;
  std::string to_markdown() const;
};

}  // namespace jordanc
