#pragma once

#include <iosfwd>

namespace asmorph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitGuard = 2;
inline constexpr int kExitInconsistency = 3;

/// Parses argv and runs one subcommand, writing the report to `out` and
/// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace asmorph::cli
