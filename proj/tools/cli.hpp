#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domset::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

// Runs one invocation. args excludes the program name. Diagnostics go to
// `err`; their verbosity follows DOMSET_LOG (quiet, info, debug).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace domset::cli
