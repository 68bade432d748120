#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sgs {

// Runs one command line (program name excluded). Human-readable output goes
// to out, diagnostics to err. Returns the process exit code: 0 success and
// all checks passed, 1 a check failed or a glue was refused, 2 malformed
// input (syntax, type, file, or flag errors).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgs
