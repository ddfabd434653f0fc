#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coordctl::cli {

enum ExitCode : int { kComputed = 0, kInputError = 1, kResourceLimit = 2 };

/// Runs one command; `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace coordctl::cli
