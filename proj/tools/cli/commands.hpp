#pragma once

#include <iosfwd>

namespace troute::cli {

/// Exit statuses of the troute tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUnexpected = 1,
  kExitPrecondition = 2,
  kExitTolerance = 3,
};

/// Entry point shared by the executable and the tests. Structured output
/// goes to `out` as JSON; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace troute::cli
