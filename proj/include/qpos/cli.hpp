#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpos::cli {

/// Exit statuses: 0 all checks passed, 1 counterexample found, 2 usage or
/// parameter error.
inline constexpr int kOk = 0;
inline constexpr int kCounterexample = 1;
inline constexpr int kUsage = 2;

/// Runs one command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpos::cli
