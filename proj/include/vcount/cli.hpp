#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vcount {

/// Command dispatch for the `vcount` tool.  Subcommands: count, snf,
/// congruence, selftest.  Exit codes: 0 success, 1 input error, 2 method
/// disagreement, 3 oracle budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vcount
