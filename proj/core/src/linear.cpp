#include "rperm/linear.hpp"

namespace rperm {

std::pair<RatFunc, RatFunc> solve_linear_2x2(const RatFunc& a11, const RatFunc& a12,
                                             const RatFunc& a21, const RatFunc& a22,
                                             const RatFunc& b1, const RatFunc& b2) {
  const RatFunc det = a11 * a22 - a12 * a21;
  if (det.is_zero()) throw SingularSystemError("singular system");
  return {(b1 * a22 - a12 * b2) / det, (a11 * b2 - b1 * a21) / det};
}

}  // namespace rperm
