#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace jpgeom {

enum class CaseStatus { pass, fail, skip };

struct CaseResult {
  std::string name;
  CaseStatus status;
  std::string details;
};

// One suite run. Cases are kept sorted by name so identical inputs always
// serialize identically; elapsed_ms is the only field that may vary between
// runs of the same input.
struct Report {
  std::string suite;
  std::vector<CaseResult> cases;
  std::int64_t elapsed_ms = 0;

  void add(const std::string& name, bool passed, const std::string& details = "");
  void skip(const std::string& name, const std::string& reason);

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
  bool ok() const { return failed() == 0; }

  const CaseResult* find(const std::string& name) const;
};

std::string status_name(CaseStatus s);

nlohmann::json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

}  // namespace jpgeom
