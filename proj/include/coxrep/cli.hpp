#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxrep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInternal = 4;

/// Runs one command; `args` excludes the program name. Output documents go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxrep::cli
