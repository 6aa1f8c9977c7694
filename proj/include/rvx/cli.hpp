#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rvx {

/// Runs the command line front end. Returns the process exit code:
/// 0 success, 1 usage/input error, 2 claim refutation under --strict.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rvx
