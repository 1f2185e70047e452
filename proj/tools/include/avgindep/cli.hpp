#pragma once

#include <iosfwd>

namespace avgindep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// Parses argv (argv[0] is the program name) and runs one subcommand.
// Output goes to `out`, diagnostics to `err`; ANSI styling only if `color`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        bool color = false);

}  // namespace avgindep::cli
