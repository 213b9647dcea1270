#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ybset {

/// Runs one CLI invocation. `args` excludes the program name.
/// Exit codes: 0 success or PASS, 1 verify FAIL, 2 invalid input,
/// 3 budget or limit exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ybset
