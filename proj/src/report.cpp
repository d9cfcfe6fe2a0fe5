#include "jpgeom/report.hpp"

#include <algorithm>

namespace jpgeom {

void Report::add(const std::string& name, bool passed, const std::string& details) {
  CaseResult c{name, passed ? CaseStatus::pass : CaseStatus::fail, details};
  auto at = std::lower_bound(cases.begin(), cases.end(), c.name,
                             [](const CaseResult& a, const std::string& n) { return a.name < n; });
  cases.insert(at, std::move(c));
}

void Report::skip(const std::string& name, const std::string& reason) {
  CaseResult c{name, CaseStatus::skip, reason};
  auto at = std::lower_bound(cases.begin(), cases.end(), c.name,
                             [](const CaseResult& a, const std::string& n) { return a.name < n; });
  cases.insert(at, std::move(c));
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(),
                    [](const CaseResult& c) { return c.status == CaseStatus::pass; }));
}

std::size_t Report::failed() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(),
                    [](const CaseResult& c) { return c.status == CaseStatus::fail; }));
}

std::size_t Report::skipped() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(),
                    [](const CaseResult& c) { return c.status == CaseStatus::skip; }));
}

const CaseResult* Report::find(const std::string& name) const {
  for (const auto& c : cases)
    if (c.name == name) return &c;
  return nullptr;
}

std::string status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::pass:
      return "pass";
    case CaseStatus::fail:
      return "fail";
    case CaseStatus::skip:
      return "skip";
  }
  return "fail";
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : r.cases)
    cases.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"details", c.details}});
  return nlohmann::json{{"suite", r.suite},
                        {"cases", cases},
                        {"passed", r.passed()},
                        {"failed", r.failed()},
                        {"skipped", r.skipped()},
                        {"elapsed_ms", r.elapsed_ms}};
}

std::string report_to_text(const Report& r) {
  std::string out = "suite " + r.suite + "\n";
  for (const auto& c : r.cases) {
    out += "  [" + status_name(c.status) + "] " + c.name;
    if (!c.details.empty()) out += ": " + c.details;
    out += "\n";
  }
  out += std::to_string(r.passed()) + " passed, " + std::to_string(r.failed()) + " failed, " +
         std::to_string(r.skipped()) + " skipped (" + std::to_string(r.elapsed_ms) + " ms)\n";
  return out;
}

}  // namespace jpgeom
