#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace isoper {

enum ExitCode : int {
  kExitOk = 0,
  kExitHypothesesUnmet = 1,
  kExitUsage = 2,
  kExitCounterexample = 3,
  kExitComputation = 4,
};

// `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isoper
