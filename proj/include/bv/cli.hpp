#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bv {

// Runs one command line (without argv[0]); returns the process exit code:
// 0 success, 1 usage error, 2 validation or domain failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace bv
