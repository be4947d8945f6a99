// cli.hpp -- command-line entry point (testable in-process)

#pragma once

#include <string>
#include <vector>

namespace maset {

/// Runs the command-line interface.  `args` excludes the program name.
/// Returns 0 on success, 1 on verification or runtime failure, 2 on usage
/// errors.
int run_cli(const std::vector<std::string>& args);

}  // namespace maset
