#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cstarineq::cli {

/// Dispatches one command-line invocation (arguments without the program
/// name). Returns the process exit code: 0 pass, 1 inequality violation
/// found, 2 usage or numerical error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cstarineq::cli
