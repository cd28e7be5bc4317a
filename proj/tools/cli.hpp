#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fvir::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,      // identity failure or violated precondition
  kConfigError = 2,  // unreadable or invalid configuration, bad usage
  kBlowup = 3,       // numerical blow-up during simulate
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fvir::cli
