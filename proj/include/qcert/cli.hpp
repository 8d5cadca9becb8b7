#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcert {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 2;      // a mathematical check failed
inline constexpr int kExitUsage = 64;    // bad arguments
inline constexpr int kExitInternal = 70; // resource/internal error

// Runs the command line given by args (without the program name), writing
// normal output to out and diagnostics to err. Returns the process exit code.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace qcert
