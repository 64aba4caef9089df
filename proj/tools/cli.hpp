#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rf::cli {

// Parses the arguments (without the program name), runs the command and writes
// the report to out. Returns 0 on success, 2 on a domain error and 3 on a
// verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rf::cli
