#ifndef TSG_CLI_HPP
#define TSG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace tsg {

// Full command-line driver minus process concerns: args exclude the program
// name, reports go to out, diagnostics to err. Returns the process exit
// code: 0 all checks passed, 1 a check failed or a theorem violation was
// found, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tsg

#endif  // TSG_CLI_HPP
