#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coarse::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one coarse_cli invocation. `args` excludes the program name. The report goes to
/// --output when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coarse::cli
