#ifndef RPERM_CHEBYSHEV_HPP
#define RPERM_CHEBYSHEV_HPP

#include <string>
#include <vector>

#include "rperm/poly.hpp"
#include "rperm/ratfunc.hpp"

namespace rperm {

/// Chebyshev polynomial of the second kind U_n(t), from
/// U_0 = 1, U_1 = 2t, U_n = 2t U_{n-1} - U_{n-2}.
Poly chebyshev_U(int n);

/// R_k(x) = 1 / (1 - x R_{k-1}(x)) with R_0 = 0, so R_1 = 1 and
/// R_2 = 1/(1-x). R_k counts 132-avoiders that also avoid 12...k.
RatFunc R(int k);

/// W_n(x) = x^{n/2} U_n(1/(2 sqrt x)), i.e. W_0 = W_1 = 1 and
/// W_n = W_{n-1} - x W_{n-2}. Integer coefficients, no radicals.
Poly cleared_W(int n);

/// x^n U_n(1/(2x)) = W_n(x^2).
Poly cleared_U(int n);

/// U_n(1/(2x)) as a rational function (cleared_U(n) / x^n). Accepts n >= -2
/// using the recurrence run backwards: U_{-1} = 0, U_{-2} = -1.
RatFunc chebyshev_U_at_half_inverse(int n);

enum class ChebIdentity {
  kContinuedFraction,  ///< R_k = 1/(1 - x R_{k-1})
  kClearedRatio,       ///< R_k = W_{k-1} / W_k
  kProduct,            ///< 1 - x^2 R_p(x^2) R_q(x^2) = U_{p+q} / (U_p U_q) at 1/(2x)
  kSum,                ///< 1 - x^2 (R_p(x^2) + R_q(x^2)) = x U_{p+q+1} / (U_p U_q) at 1/(2x)
};

struct IdentityVerdict {
  ChebIdentity which;
  int p = 0;
  int q = 0;
  RatFunc lhs;
  RatFunc rhs;
  bool pass = false;
};

/// Checks a single identity instance by exact equality of normalized forms.
/// For the one-index identities q is ignored and p is k.
IdentityVerdict verify_identity(ChebIdentity which, int p, int q = 0);

/// Every identity for 1 <= k <= max_k and 0 <= p, q <= max_pq.
std::vector<IdentityVerdict> identity_suite(int max_k, int max_pq);

std::string to_string(ChebIdentity which);

}  // namespace rperm

#endif  // RPERM_CHEBYSHEV_HPP
