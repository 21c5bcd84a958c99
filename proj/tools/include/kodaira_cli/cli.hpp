#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kodaira::cli {

// Stable process exit codes.
enum ExitCode : int {
    kOk = 0,
    kParseError = 1,
    kInadmissible = 2,
    kGoldenDiff = 3,
    kCheckFailed = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kodaira::cli
