#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prelog::cli {

enum ExitCode { kOk = 0, kChecksFailed = 1, kUsage = 2 };

/// Runs the prelogchow command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prelog::cli
