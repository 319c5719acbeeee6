#pragma once

#include <iosfwd>

namespace astvec {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInput = 2, kExitNumeric = 3 };

/// Entry point of the astvec command. Subcommands: parse, corpus-build,
/// train, nn, cluster, classify, export.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace astvec
