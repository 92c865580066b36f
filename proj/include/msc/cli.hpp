#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace msc {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolations = 1,  ///< verify / search found non-conforming cases
  kExitUsage = 2,       ///< bad flags or malformed input
  kExitResource = 3,    ///< a --cap-* limit was exceeded
};

/// Runs the `msc` command line. `args` excludes the program name.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace msc
