#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cf::cli {

// dispatches one command line; returns the process exit code:
// 0 success, 1 validation or usage error, 2 verification failure
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cf::cli
