#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ninv::cli {

/// Exit statuses of the command-line tool.
enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kAssertion = 3,
  kFormat = 4,
};

/// Runs the tool with `args` (excluding the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ninv::cli
