#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace imbalance {

// Entry point shared by the binary and the tests.  `args` excludes argv[0].
// Returns the process exit code: 0 success, 1 a verification suite failed,
// 2 malformed command line or input, 3 an enumeration cap was exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace imbalance
