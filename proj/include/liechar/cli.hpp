#pragma once

#include <iosfwd>

namespace liechar {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnverified = 2;
inline constexpr int kExitSolver = 3;
inline constexpr int kExitUsage = 4;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace liechar
