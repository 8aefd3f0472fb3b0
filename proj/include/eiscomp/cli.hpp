#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eiscomp::cli {

// Runs one invocation ("kostant", "faces", "euler", "table1", "boundary",
// "pgh", "pgh-scan", "ghost-prove") against the given streams. Returns the
// process exit status: 0 success, 2 usage error, 3 registry/constraint
// contradiction outside the expected branch analysis.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eiscomp::cli
