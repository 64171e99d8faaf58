#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holoforge::cli {

/// Runs one command line (without the program name). Machine-readable
/// results go to `out`; progress and the single-line error report
/// "error: <kind>: <message>" go to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace holoforge::cli
