#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace secantq {

// Runs one CLI invocation (args excludes the program name). Exit status:
// 0 success, 1 verification failure, 2 usage error, 3 genericity exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace secantq
