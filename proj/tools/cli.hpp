#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zpd::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInvalidInput = 2,
    kInvariant = 3,
};

// args excludes the program name.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace zpd::cli
