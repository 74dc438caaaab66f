#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fialg::cli {

enum ExitCode : int { ok = 0, checks_failed = 1, input_error = 2 };

// Runs one command line (args[0] is the program name). Reports go to --out or
// `out`; diagnostics and summaries go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fialg::cli
