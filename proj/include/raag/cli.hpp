#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace raag::cli {

// Runs one subcommand; args excludes the program name. Returns the exit code:
// 0 decided, 2 inconclusive, 1 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace raag::cli
