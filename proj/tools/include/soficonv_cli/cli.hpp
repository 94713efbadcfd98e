#pragma once

#include <ostream>

namespace soficonv::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDomain = 3,
  kResource = 4,
};

/// Runs one command line. Results go to `out`; failures are reported on
/// `err` as {"error": CODE, "message": ...}.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace soficonv::cli
