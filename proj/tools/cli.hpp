#pragma once

// Command-line front end. run_cli is the whole program minus process setup, so
// tests can drive it with in-memory streams.
//
// Exit codes: 0 success, 1 property failure, 2 usage error, 3 domain error.

#include <iosfwd>
#include <string>
#include <vector>

namespace recurring::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Worker count: RECURRING_THREADS if set to a positive integer, capped by the
// hardware concurrency; at least 1.
unsigned worker_count();

}  // namespace recurring::cli
