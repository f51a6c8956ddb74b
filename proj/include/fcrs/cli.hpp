#pragma once

#include <ostream>

namespace fcrs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

/// Parses argv (argv[0] is the program name) and runs one subcommand.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fcrs::cli
