// Slow reference implementations used only by the tests. Nothing here shares
// code with the library: permutations come from std::next_permutation over
// all of S_n, occurrences from explicit index combinations.
#ifndef RPERM_TESTS_NAIVE_HPP
#define RPERM_TESTS_NAIVE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace naive {

using Seq = std::vector<int>;

inline bool same_order(const Seq& a, const Seq& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if ((a[i] < a[j]) != (b[i] < b[j])) return false;
  return true;
}

inline std::int64_t occurrences(const Seq& p, const Seq& tau) {
  const std::size_t n = p.size(), k = tau.size();
  if (k > n) return 0;
  if (k == 0) return 1;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  std::int64_t count = 0;
  do {
    Seq sub;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) sub.push_back(p[i]);
    if (same_order(sub, tau)) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

inline bool avoids_132(const Seq& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (p[i] < p[k] && p[k] < p[j]) return false;
  return true;
}

inline bool is_even(const Seq& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv % 2 == 0;
}

/// Every 132-avoider of length n, in lexicographic order.
inline std::vector<Seq> avoiders(int n) {
  Seq p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Seq> out;
  do {
    if (avoids_132(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

struct Counts {
  std::int64_t even = 0, odd = 0;
};

/// Counts 132-avoiders of length n accepted by keep, split by parity.
inline Counts count(int n, const std::function<bool(const Seq&)>& keep) {
  Counts c;
  for (const Seq& p : avoiders(n)) {
    if (!keep(p)) continue;
    (is_even(p) ? c.even : c.odd) += 1;
  }
  return c;
}

inline int rlm(const Seq& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool top = true;
    for (std::size_t j = i + 1; j < p.size(); ++j) top = top && p[i] > p[j];
    c += top;
  }
  return c;
}

/// Taylor coefficients of num/den (integer coefficients, den[0] = +-1).
inline std::vector<std::int64_t> expand(const std::vector<std::int64_t>& num, const std::vector<std::int64_t>& den,
                                        int order) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(order) + 1, 0);
  for (int n = 0; n <= order; ++n) {
    std::int64_t acc = n < static_cast<int>(num.size()) ? num[static_cast<std::size_t>(n)] : 0;
    for (int j = 1; j <= n && j < static_cast<int>(den.size()); ++j)
      acc -= den[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(n - j)];
    out[static_cast<std::size_t>(n)] = acc / den[0];
  }
  return out;
}

inline std::vector<std::int64_t> catalan(int order) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(order) + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= order; ++n) c[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n - 1)] * 2 * (2 * n - 1) / (n + 1);
  return c;
}

}  // namespace naive

#endif  // RPERM_TESTS_NAIVE_HPP
