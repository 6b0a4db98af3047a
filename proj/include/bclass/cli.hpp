#ifndef BCLASS_CLI_HPP
#define BCLASS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace bclass {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  exit_ok = 0,
  exit_tolerance = 1,
  exit_parse = 2,
  exit_precondition = 3,
  exit_numerical = 4,
};

/// Runs one command line (args excludes the program name). Output goes to
/// `out` only on success; failures write a single line to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bclass

#endif  // BCLASS_CLI_HPP
