#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tdpt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitPhysicsGuard = 2;

/// Entry point of the tdpt tool; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tdpt::cli
