#ifndef SKEWRING_REPORT_HPP
#define SKEWRING_REPORT_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace skewring {

/// `witness` marks a check whose expected outcome is a counterexample and
/// which produced one; it counts as a success.
enum class CheckStatus { pass, fail, witness };

inline const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::witness: return "witness";
  }
  return "?";
}

struct CheckRecord {
  std::string id;
  int criterion = 0;  // 0 for invariant checks outside the numbered criteria
  std::string anchor;
  CheckStatus status = CheckStatus::pass;
  std::optional<std::string> witness;
  std::string detail;
  double elapsed_ms = 0;

  bool ok() const { return status != CheckStatus::fail; }
};

struct SuiteReport {
  std::string suite;
  std::string config_digest;
  std::vector<CheckRecord> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.ok(); });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.ok(); }));
  }
};

enum class ReportFormat { json, markdown };

/// Field order is fixed. With `timing` false the document is a pure function
/// of the checks performed.
inline std::string emit_report(const SuiteReport& r, ReportFormat format, bool timing = true) {
  if (format == ReportFormat::json) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["config_digest"] = r.config_digest;
    j["passed"] = r.checks.size() - r.failures();
    j["failed"] = r.failures();
    auto& checks = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
      nlohmann::ordered_json x;
      x["id"] = c.id;
      x["criterion"] = c.criterion;
      x["anchor"] = c.anchor;
      x["status"] = check_status_name(c.status);
      if (c.witness) x["witness"] = *c.witness;
      if (!c.detail.empty()) x["detail"] = c.detail;
      if (timing) x["elapsed_ms"] = static_cast<std::int64_t>(c.elapsed_ms + 0.5);
      checks.push_back(std::move(x));
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "# Suite `" << r.suite << "`\n\n";
  os << "config digest: `" << r.config_digest << "`  \n";
  os << "result: " << (r.ok() ? "PASS" : "FAIL") << " (" << r.checks.size() - r.failures() << "/" << r.checks.size()
     << " checks)\n\n";
  os << "| id | criterion | anchor | status | witness |" << (timing ? " ms |" : "") << "\n";
  os << "|---|---|---|---|---|" << (timing ? "---|" : "") << "\n";
  for (const auto& c : r.checks) {
    std::string w = c.witness.value_or(c.detail);
    std::replace(w.begin(), w.end(), '|', '/');
    os << "| " << c.id << " | " << (c.criterion ? std::to_string(c.criterion) : "-") << " | " << c.anchor << " | "
       << check_status_name(c.status) << " | " << w << " |";
    if (timing) os << " " << static_cast<std::int64_t>(c.elapsed_ms + 0.5) << " |";
    os << "\n";
  }
  return os.str();
}

}  // namespace skewring

#endif
