#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rankdesigns::cli {

/// Runs one command. `args` excludes the program name. Returns 0 on
/// success, 1 on a mathematical negative or domain error, 2 on a usage or
/// parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankdesigns::cli
