#ifndef RPERM_PATTERN_MATCHER_HPP
#define RPERM_PATTERN_MATCHER_HPP

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "rperm/perm.hpp"

namespace rperm {

/// Occurrence search for one fixed pattern.
///
/// Positions of the text are chosen left to right. When the t-th pattern
/// entry is placed, its value must lie strictly between the values already
/// matched to its nearest smaller and nearest larger pattern neighbours among
/// entries 0..t-1. Those two thresholds are enough to keep the partial match
/// order-isomorphic, so no other comparison is needed.
class PatternMatcher {
 public:
  static constexpr int kMaxLength = 16;

  explicit PatternMatcher(const Perm& tau) : k_(tau.size()) {
    if (k_ > kMaxLength) throw std::invalid_argument("pattern longer than 16");
    for (int t = 0; t < k_; ++t) {
      int lo = -1, hi = -1;
      for (int s = 0; s < t; ++s) {
        if (tau[s] < tau[t] && (lo < 0 || tau[s] > tau[lo])) lo = s;
        if (tau[s] > tau[t] && (hi < 0 || tau[s] < tau[hi])) hi = s;
      }
      lower_[static_cast<std::size_t>(t)] = lo;
      upper_[static_cast<std::size_t>(t)] = hi;
    }
  }

  int length() const { return k_; }

  std::int64_t count(std::span<const int> text) const {
    if (k_ == 0) return 1;
    std::array<int, kMaxLength> chosen{};
    return count_from(text, 0, 0, chosen);
  }

  bool occurs_in(std::span<const int> text) const {
    if (k_ == 0) return true;
    std::array<int, kMaxLength> chosen{};
    return find_from(text, 0, 0, chosen);
  }

 private:
  bool fits(int value, int t, const std::array<int, kMaxLength>& chosen) const {
    const int lo = lower_[static_cast<std::size_t>(t)];
    const int hi = upper_[static_cast<std::size_t>(t)];
    if (lo >= 0 && value <= chosen[static_cast<std::size_t>(lo)]) return false;
    if (hi >= 0 && value >= chosen[static_cast<std::size_t>(hi)]) return false;
    return true;
  }

  std::int64_t count_from(std::span<const int> text, int t, int start, std::array<int, kMaxLength>& chosen) const {
    const int n = static_cast<int>(text.size());
    std::int64_t total = 0;
    for (int i = start; i <= n - (k_ - t); ++i) {
      const int v = text[static_cast<std::size_t>(i)];
      if (!fits(v, t, chosen)) continue;
      chosen[static_cast<std::size_t>(t)] = v;
      total += (t + 1 == k_) ? 1 : count_from(text, t + 1, i + 1, chosen);
    }
    return total;
  }

  bool find_from(std::span<const int> text, int t, int start, std::array<int, kMaxLength>& chosen) const {
    const int n = static_cast<int>(text.size());
    for (int i = start; i <= n - (k_ - t); ++i) {
      const int v = text[static_cast<std::size_t>(i)];
      if (!fits(v, t, chosen)) continue;
      chosen[static_cast<std::size_t>(t)] = v;
      if (t + 1 == k_ || find_from(text, t + 1, i + 1, chosen)) return true;
    }
    return false;
  }

  int k_;
  std::array<int, kMaxLength> lower_{};
  std::array<int, kMaxLength> upper_{};
};

}  // namespace rperm

#endif  // RPERM_PATTERN_MATCHER_HPP
