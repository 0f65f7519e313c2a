#pragma once

#include <iosfwd>

namespace metricvote {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitGuard = 3;
inline constexpr int kExitMismatch = 4;

/// Entry point of the metricvote command line. Results go to `out` (or the
/// --output file), messages to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace metricvote
