#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gt42/scalar.hpp"

namespace gt42 {

struct RunConfig {
  ScalarMode mode = ScalarMode::ComplexF64;
  std::uint64_t seed = 42;
  double eps = kDefaultEps;
  // Scale factor on per-check sample counts (1 = full default counts).
  double sample_scale = 1.0;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  bool skipped = false;     // check not applicable to the configured scalar mode
  std::string measured;
  std::string expected;
  // Where the expected value comes from: "definition" (restates the
  // implemented definition), "analytic" (closed form derived by hand),
  // "oracle" (independent computation inside the check), or "reference"
  // (frozen constant vetted ahead of time).
  std::string origin;
  double ms = 0.0;
};

struct VerificationReport {
  RunConfig config;
  std::vector<CheckResult> checks;  // sorted by name

  int failures() const;
  int passed() const;
  int skipped() const;
};

VerificationReport run_verification(const RunConfig& config);

std::string report_text(const VerificationReport& rep);
nlohmann::json report_json(const VerificationReport& rep);

}  // namespace gt42
