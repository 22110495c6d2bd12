#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hsr {

/// Exit codes shared by every command.
enum ExitCode : int {
  kExitOk = 0,
  kExitNumericOnly = 1,
  kExitInvalid = 2,
  kExitFailed = 3,
};

/// Runs the hsr command line.  args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsr
