#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "jpgeom/report.hpp"
#include "jpgeom/scalar.hpp"

namespace jpgeom {

// Knobs shared by every suite. samples = 0 picks the suite's documented
// default; cap bounds every enumeration (orbits, group closures, exhaustive
// scans) and oversized cases are reported as skipped rather than attempted.
struct VerifyOptions {
  std::string entry = "sl2";
  FieldSpec field = FieldSpec::prime(5);
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t cap = 1000000;
};

std::vector<std::string> suite_names();

// Runs one named suite against the catalog entry and returns the filled
// report (elapsed_ms included). Unknown suite names throw UnknownEntry.
// The suite "all" runs every other suite and prefixes case names.
Report run_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace jpgeom
