#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dubins_rrt {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitNoSolution = 3,
};

/// Entry point behind the `dubins_rrt` executable: subcommands dubins, plan,
/// bench and render. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dubins_rrt
