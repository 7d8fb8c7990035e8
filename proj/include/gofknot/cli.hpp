// Command-line front end, factored as a library call so tests can drive it
// in-process. args excludes the program name. Returns the process exit code:
// 0 success, 1 domain error, 2 usage error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gofknot {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gofknot
