#pragma once

#include <iosfwd>

namespace skewmorph::cli {

/// Exit codes shared by all commands.
enum ExitCode : int {
  kOk = 0,
  kUsageOrIo = 1,
  kMismatch = 2,
  kNotSkew = 3,
};

/// Runs the command line `argv[0] <command> ...`, writing normal output to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace skewmorph::cli
