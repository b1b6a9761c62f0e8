#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lehmer::cli {

enum ExitCode : int {
  ok = 0,
  check_failed = 1,  // verify found a bound above the measure
  input_error = 2,
  vacuous = 3,
  hypothesis_failure = 4,
};

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lehmer::cli
