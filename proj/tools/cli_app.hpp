#pragma once

#include <ostream>

namespace curvop::cli {

// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or config error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace curvop::cli
