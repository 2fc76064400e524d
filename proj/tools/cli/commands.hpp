#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ldaroc::cli {

// Runs one invocation; args excludes the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ldaroc::cli
