#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latticebound {

/// Exit statuses of the command-line harness.
enum ExitCode : int { kExitOk = 0, kExitVerification = 1, kExitUsage = 2 };

/// Runs the harness on `args` (without the program name). Simplex input is
/// read from --census <path> when given, otherwise from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace latticebound
