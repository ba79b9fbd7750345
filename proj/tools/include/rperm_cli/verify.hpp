#ifndef RPERM_CLI_VERIFY_HPP
#define RPERM_CLI_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "rperm/oracle.hpp"
#include "rperm_cli/report.hpp"

namespace rperm::cli {

struct VerifyOptions {
  /// Family-specific size limit; each family has its own default.
  std::optional<int> max_k;
  int max_n = 12;
  int bound = kDefaultOracleBound;
};

/// Every name accepted by run_verification, "all" excluded.
const std::vector<std::string>& family_names();

/// Runs one family, or every family for "all".
/// Throws std::invalid_argument for an unknown family.
Report run_verification(const std::string& family, const VerifyOptions& options);

/// The Chebyshev identity suite: single-index identities for 1 <= k <= max_k,
/// two-index identities for 0 <= p, q <= max_pq.
Report chebyshev_report(int max_k, int max_pq);

}  // namespace rperm::cli

#endif  // RPERM_CLI_VERIFY_HPP
