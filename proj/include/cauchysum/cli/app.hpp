#ifndef CAUCHYSUM_CLI_APP_HPP
#define CAUCHYSUM_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cauchysum::cli {

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 all PASS/FLAGGED, 1 any FAIL/NOT_CONVERGED/ERROR,
/// 2 usage or configuration error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cauchysum::cli

#endif
