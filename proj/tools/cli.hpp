#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringhcp::cli {

// Runs one command line (without the program name). Data goes to `out`,
// logs and diagnostics to `err`. Returns the process exit code: 0 success,
// 1 a failed check, 2 a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringhcp::cli
