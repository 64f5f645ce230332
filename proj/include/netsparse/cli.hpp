#ifndef NETSPARSE_CLI_HPP
#define NETSPARSE_CLI_HPP

#include <string>
#include <vector>

namespace netsparse {

// Runs one CLI command (args exclude the program name). Exit codes:
// 0 success, 1 I/O or parse errors, 2 infeasible input, 3 budget refusal.
int run_cli(std::vector<std::string> args);

} // namespace netsparse

#endif
