#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rr::cli {

// Runs the command-line tool on the given arguments (program name excluded).
// Returns 0 on success, 1 on a usage error, 2 on a data or constraint error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rr::cli
