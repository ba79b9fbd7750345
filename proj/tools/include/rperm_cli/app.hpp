#ifndef RPERM_CLI_APP_HPP
#define RPERM_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "rperm_cli/report.hpp"

namespace rperm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Runs the tool on argv (without the program name), writing the document to
/// out and diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// kExitVerificationFailed when the report holds a fail, kExitOk otherwise.
inline int exit_code_for(const Report& report) {
  return report.has_failure() ? kExitVerificationFailed : kExitOk;
}

}  // namespace rperm::cli

#endif  // RPERM_CLI_APP_HPP
