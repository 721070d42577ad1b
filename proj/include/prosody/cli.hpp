#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prosody::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kIo = 3,
  kPatternFailure = 4,
};

/// Entry point shared by the `prosodyc` binary and the tests. `args` excludes
/// the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prosody::cli
