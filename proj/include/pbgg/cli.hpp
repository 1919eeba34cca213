#pragma once

// Command-line front end.  Exit codes: 0 success, 1 oracle mismatch,
// 2 input/usage error, 3 resource-guard error.

#include <iosfwd>
#include <string>
#include <vector>

namespace pbgg {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbgg
