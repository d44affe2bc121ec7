#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphstab::cli {

/// Exit codes of the graphstab tool.
enum Exit : int { kOk = 0, kInputError = 1, kNegative = 2 };

/// Runs the tool with `args` (without the program name). JSON goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphstab::cli
