#pragma once

#include <iosfwd>

namespace detcap {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // disagreement, failed round-trip
inline constexpr int kExitUsage = 2;    // bad flags, unreadable or invalid input

// Entry point of the detcap tool, with injectable streams for testing.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace detcap
