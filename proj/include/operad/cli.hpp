#pragma once

#include <iosfwd>

namespace operad {

/// Process exit codes of the `operad` tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitLawFailure = 1,
    kExitUserError = 2,
    kExitConfigError = 3,
};

/// Entry point of the `operad` command line tool, with output streams
/// injected so it can be driven in-process.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace operad
