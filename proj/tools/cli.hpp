#pragma once

#include <iosfwd>

namespace ptcomp::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidConfig = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitInternal = 3;
inline constexpr int kExitVerifyFailed = 4;

// Runs the command line. Normal output goes to out, diagnostics and default
// reports to err. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ptcomp::cli
