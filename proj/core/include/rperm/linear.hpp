#ifndef RPERM_LINEAR_HPP
#define RPERM_LINEAR_HPP

#include <stdexcept>
#include <utility>

#include "rperm/ratfunc.hpp"

namespace rperm {

/// Raised when a 2x2 system over the rational-function field has a zero
/// determinant. For the generating-function engine this means the input
/// pattern produced a degenerate recursion.
class SingularSystemError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Solves a11*u + a12*v = b1, a21*u + a22*v = b2 by Cramer's rule.
std::pair<RatFunc, RatFunc> solve_linear_2x2(const RatFunc& a11, const RatFunc& a12,
                                             const RatFunc& a21, const RatFunc& a22,
                                             const RatFunc& b1, const RatFunc& b2);

}  // namespace rperm

#endif  // RPERM_LINEAR_HPP
