#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bwtcst::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failed = 1;
inline constexpr int exit_usage = 2;

/// Runs the command line `args` (program name excluded) and returns the
/// exit code. Diagnostics go to `err`, reports to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bwtcst::cli
