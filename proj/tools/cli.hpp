#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hodgeforge::cli {

/// Runs one command. `args` excludes the program name. Data goes to `out`,
/// diagnostics to `err`. Exit codes: 0 success, 1 domain error, 2 malformed
/// input, bad flags or unreadable files.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hodgeforge::cli
