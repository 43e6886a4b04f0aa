#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circa::cli {

/// Exit codes: 0 success, 1 invalid input, 2 internal inconsistency between
/// exact routes.
enum ExitCode : int { kOk = 0, kInvalidInput = 1, kInconsistent = 2 };

/// Runs one invocation; `args` excludes the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace circa::cli
