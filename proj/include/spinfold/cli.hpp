#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinfold::cli {

// Runs one command-line invocation; args exclude the program name. Returns
// the process exit status: 0 on success, 1 when `verify` detects a failure,
// 2 on input or domain errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace spinfold::cli
