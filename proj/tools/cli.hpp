#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace octal::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kResourceLimit = 3,
};

// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace octal::cli
