#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hybrid {

// Runs the command line given by args (program name excluded) and writes
// the result to out and diagnostics to err. Returns the process exit
// status: 0 success, 2 usage or syntax error, 3 unsupported region.
int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hybrid
