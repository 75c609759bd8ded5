#pragma once

#include <iosfwd>

namespace jcd::cli {

/// Stable exit codes.
enum ExitCode : int {
  ok = 0,
  check_failed = 1,
  parse_error = 2,
  precondition_failed = 3,
};

/// Entry point shared by the executable and the tests. Input path "-" reads stdin.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jcd::cli
