#pragma once

// Command-line driver for the hawaii tool: analyze, sweep, verify, trials and
// family subcommands with text or JSON reports.

#include <iosfwd>
#include <string>
#include <vector>

namespace hawaii::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verdict_failed = 1;
inline constexpr int exit_usage = 2;

/// Runs the tool on argv[1..] and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Version string reported in every JSON envelope.
std::string version();

}  // namespace hawaii::cli
