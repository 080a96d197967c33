#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lagcd::cli {

enum ExitCode : int {
  kOk = 0,         // success, possibly with warnings
  kInputError = 2, // unreadable or invalid input
  kNumericError = 3,
};

/// Runs the `lagcd` command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lagcd::cli
