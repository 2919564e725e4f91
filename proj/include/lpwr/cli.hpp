#ifndef LPWR_CLI_HPP
#define LPWR_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lpwr {

/// Runs one CLI invocation (args includes the program name).  All output
/// goes to `out`; identical invocations produce identical bytes.
/// Exit status: 0 = pass, 1 = property failure, 2 = usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

} // namespace lpwr

#endif
