#pragma once

// Command-line driver. `run` parses arguments (argv[0] excluded), executes a
// subcommand and returns the process exit code:
//   0 success or all checks passed
//   1 a verification check failed
//   2 a resource limit was exceeded
//  64 usage, parse or input error

#include <iosfwd>
#include <string>
#include <vector>

namespace kgonal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitLimit = 2;
inline constexpr int kExitUsage = 64;

// Environment variable holding the verifier's worker count.
inline constexpr const char* kWorkersEnv = "KGONAL_WORKERS";

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kgonal::cli
