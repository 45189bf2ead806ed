#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace prophet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitConfig = 2;

// Parses and runs one subcommand (simulate, sweep, audit, experiments).
// CSV goes to `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prophet::cli
