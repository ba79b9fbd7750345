#ifndef RPERM_CLOSED_FORMS_HPP
#define RPERM_CLOSED_FORMS_HPP

#include <optional>
#include <string>

#include "rperm/biseries.hpp"
#include "rperm/engine.hpp"
#include "rperm/oracle.hpp"
#include "rperm/perm.hpp"
#include "rperm/ratfunc.hpp"
#include "rperm/series.hpp"

namespace rperm {

// Closed forms for particular pattern families, expressed through R_k and the
// cleared Chebyshev polynomials. Lengths are pattern lengths, not half-indices.

/// M of (beta, |beta|+1) from M of beta:
/// 2(1 + x M_b(-x)) / ((1 - x M_b(x))^2 + (1 + x M_b(-x))^2).
RatFunc closed_mmc(const Perm& beta);

/// Parity split of all 132-avoiders: E = (C+1)/2 + x C(x^2)/2, O = (C-1)/2 - x C(x^2)/2.
ParitySeries closed_unrestricted(int order);

/// Builds E and O from F and M.
GFTriple triple_from(RatFunc F, RatFunc M);

/// 12...len, len >= 1.
GFTriple closed_increasing(int len);

/// 2134...len, len >= 2.
GFTriple closed_213k(int len);

enum class KdCase {
  kOddOdd,    ///< [2k+1, 2d+1]
  kOddEven,   ///< [2k+1, 2d]
  kEvenOdd,   ///< [2k, 2d+1]
  kEvenEven,  ///< [2k, 2d]
};
std::string to_string(KdCase c);
KdCase kd_case(int len, int d);

/// (d+1)...len 1...d with 1 <= d <= len-1. For kEvenOdd this is the printed
/// form, which the verification report compares against the engine.
GFTriple closed_kd(int len, int d);

/// True when tau avoids 132, has odd length and splits into maximal runs
/// top_1 low_1 ... top_r low_r (only low_r may be empty) where the tops are
/// s+1..len in increasing order, each low run is a block of consecutive
/// increasing values lying below the previous low run, and every prefix
/// top_1 low_1 ... top_p low_p has odd length.
bool is_odd_wedge(const Perm& tau);
/// E, O, M for an odd-wedge pattern; nullopt when tau is not one.
std::optional<GFTriple> odd_wedge(const Perm& tau);

/// Generating functions for 132-avoiders containing a pattern exactly r times.
struct ContainGF {
  RatFunc M;
  RatFunc E;
  RatFunc O;
};

/// x^len / W_len^2: all 132-avoiders containing 12...len exactly once.
RatFunc contain_once_total(int len);
/// 12...len contained exactly once, len >= 1.
ContainGF contain_once_increasing(int len);

/// 12...(2k+1) contained exactly r times, r in {0, 1, 2}, k >= 1.
ContainGF contain_r_increasing(int k, int r);
/// Total for r = 2 as printed: x^{k+1} W_{k-1} / W_k^3. Kept for reporting.
RatFunc contain_twice_total_printed(int k);
/// Total for r = 2 that matches enumeration: x^{K+1} W_{K-1} / W_K^3, K = 2k+1.
RatFunc contain_twice_total(int k);

/// Even and odd distributions of right-to-left maxima, y marking the count.
ParityBiSeries rlm_distribution(int order);

/// 132-avoiders avoiding both 12...len and 2134...len, len >= 4.
GFTriple two_restrictions(int len);
/// The auxiliary W_m of the two-restriction formulas (m >= 3); equals F for
/// avoiding 132, 12...m and 2134...m.
RatFunc two_restriction_W(int m);

/// D_m of the bivariate formula, m >= -2.
RatFunc gk_D(int m);
/// sum over 132-avoiders avoiding 12...(k+1) of sign * y^{occurrences of 12...k}.
BiSeries Gk_xy(int k, int order);
/// G_k at y = 1: 1 + x (D_{k-1} - x^k) / D_k.
RatFunc Gk_at_one(int k);

/// Fibonacci numbers with F_0 = F_1 = 1.
Integer fibonacci(int n);

}  // namespace rperm

#endif  // RPERM_CLOSED_FORMS_HPP
