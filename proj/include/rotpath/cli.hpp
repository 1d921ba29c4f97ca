#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rotpath {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Runs the `rotpath` command line. `args` excludes the program name.
// Honours ROTPATH_MAX_N (overrides every brute-force cap) from the
// environment.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace rotpath
