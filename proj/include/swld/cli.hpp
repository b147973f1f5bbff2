#pragma once

#include <iosfwd>

namespace swld::cli {

enum ExitCode { kSuccess = 0, kFailure = 1, kUsage = 2 };

// Entry point of the command-line tool. Subcommands: rate, plant, loclaw,
// tail, typicality, sweep.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace swld::cli
