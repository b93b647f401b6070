#pragma once

// The ten acceptance criteria as an executable suite, shared by the
// `selftest` subcommand and the acceptance test binary.

#include <iosfwd>
#include <string>
#include <vector>

#include "asmorph/config.hpp"
#include "asmorph/report.hpp"

namespace asmorph {

enum class CriterionStatus { Pass, Fail, Skipped };
std::string_view to_string(CriterionStatus s);

struct CriterionResult {
  int id = 0;
  std::string name;
  CriterionStatus status = CriterionStatus::Fail;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  bool inconsistency = false;  // an invariant violation was raised
};

struct AcceptanceSummary {
  std::vector<CriterionResult> results;
  bool passed() const;         // no criterion failed
  bool inconsistent() const;   // some criterion raised an invariant violation
};

/// Frozen reference values; any key may be overridden from a JSON file.
Json default_golden();
/// Errors: InvalidParameters when the file cannot be read or parsed.
Json load_golden(const std::string& path);

/// Runs criteria 1..10 (or only `only` when nonzero). One line per criterion
/// is written to `log` when it is non-null.
AcceptanceSummary run_acceptance(const Config& cfg, const Json& golden, std::ostream* log = nullptr, int only = 0);

Json to_json(const CriterionResult& r);

}  // namespace asmorph
