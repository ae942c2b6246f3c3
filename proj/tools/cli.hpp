#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aspec::cli {

/// Runs the `aspec` command line. `args` excludes the program name. Results
/// go to `out` as one JSON object; diagnostics go to `err`. Returns the exit
/// status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aspec::cli
