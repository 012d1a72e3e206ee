#ifndef PERMCENSUS_TOOLS_CLI_HPP
#define PERMCENSUS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace permcensus::cli {

enum ExitCode : int {
  ok = 0,
  check_failed = 1,    // oracle-check found a mismatch
  usage_error = 2,     // malformed flags or subcommand
  unknown_stat = 3,
  out_of_range = 4,
  unreadable_file = 5,
};

/// Runs one invocation. `args` excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

} // namespace permcensus::cli

#endif // PERMCENSUS_TOOLS_CLI_HPP
