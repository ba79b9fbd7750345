#ifndef RPERM_CONTAINMENT_HPP
#define RPERM_CONTAINMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "rperm/oracle.hpp"
#include "rperm/perm.hpp"
#include "rperm/series.hpp"

namespace rperm {

/// Which avoided pattern the j = 1 term uses on the left of the split.
enum class PrefixConvention {
  kCorrected,  ///< the first block closed by its maximum, normalized
  kLiteral,    ///< the prefix ending at the second right-to-left maximum
};

struct EquationCheck {
  std::string name;
  Series lhs;
  Series rhs;
  bool pass = false;
};

/// Series of the 132-avoiders containing `once` exactly once (every
/// permutation when it is empty) and avoiding `avoid` (no restriction when
/// absent, nothing when it is the empty pattern), split by parity.
ParitySeries contain_once_component(const Perm& once, const std::optional<Perm>& avoid, int order,
                                    int bound = kDefaultOracleBound);

/// Checks the exactly-once equations for tau (parity-split, sign-weighted
/// and total forms) coefficientwise through x^order, every component series
/// coming from enumeration.
std::vector<EquationCheck> verify_containment_equations(const Perm& tau, int order,
                                                        PrefixConvention convention = PrefixConvention::kCorrected,
                                                        int bound = kDefaultOracleBound);

}  // namespace rperm

#endif  // RPERM_CONTAINMENT_HPP
