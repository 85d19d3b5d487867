#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "primecert/report.hpp"

namespace primecert::cli {

/// Exit codes of run().
enum ExitCode : int { kPass = 0, kFail = 1, kUndecided = 2, kUsage = 3 };

inline constexpr long kMinPrecision = 16;
inline constexpr long kMaxPrecision = 1L << 20;

/// 1 if any report failed, else 2 if any is undecided, else 0.
int exit_code(const std::vector<CheckReport>& reports);

/// Parses `args` (without the program name), runs the requested checks and
/// writes the report to `out` or to the --out path. Usage and domain errors
/// go to `err` with exit code kUsage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primecert::cli
