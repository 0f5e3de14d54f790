#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kroncave {

// Exit codes of run_command.
enum ExitCode : int {
  exit_ok = 0,
  exit_violations = 1,
  exit_usage = 2,
  exit_failure = 3,
};

// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kroncave
