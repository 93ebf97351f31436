#pragma once

// Command-line front end. `run` takes the arguments without the program name and returns
// the process exit code: 0 success, 1 verification or validation failure, 2 usage or
// size-guard error.

#include <ostream>
#include <string>
#include <vector>

namespace hf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hf::cli
