#ifndef LEIBNIZ_CLI_HPP
#define LEIBNIZ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace leibniz {

enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitUsage = 2 };

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err. Output is deterministic for fixed inputs and seed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leibniz

#endif  // LEIBNIZ_CLI_HPP
