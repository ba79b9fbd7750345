#ifndef RPERM_PERM_HPP
#define RPERM_PERM_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rperm {

enum class Parity { kEven, kOdd };

inline Parity flip(Parity p) { return p == Parity::kEven ? Parity::kOdd : Parity::kEven; }
inline Parity combine(Parity a, Parity b) { return a == b ? Parity::kEven : Parity::kOdd; }
std::string to_string(Parity p);

/// A permutation of 1..n stored one-based by value (entries are 1..n).
/// The empty permutation is allowed.
class Perm {
 public:
  Perm() = default;
  /// Throws std::invalid_argument unless entries are a bijection on 1..n.
  explicit Perm(std::vector<int> entries);

  /// Accepts "2,1,3,4" or, for length <= 9, the compact digit form "2134".
  /// The empty string (or "e") is the empty permutation.
  static Perm parse(std::string_view text);
  static Perm identity(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  std::span<const int> entries() const { return entries_; }

  /// Compact digits for length <= 9, comma-separated otherwise; "" when empty.
  std::string to_string() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<int> entries_;
};

/// Order-isomorphic permutation of a sequence of distinct values.
Perm normalize(std::span<const int> segment);

std::int64_t inversions(std::span<const int> p);
Parity sign(std::span<const int> p);
inline Parity sign(const Perm& p) { return sign(p.entries()); }

/// Number of index subsequences of p order-isomorphic to tau.
std::int64_t occurrences(std::span<const int> p, const Perm& tau);
/// Early-exit occurrence search.
bool contains(std::span<const int> p, const Perm& tau);
inline bool avoids(std::span<const int> p, const Perm& tau) { return !contains(p, tau); }

/// Entries strictly greater than every entry to their right.
int right_to_left_maxima(std::span<const int> p);
/// Occurrences of 12...j (j >= 1), by an increasing-subsequence count.
std::int64_t increasing_occurrences(std::span<const int> p, int j);

/// 12...k
Perm increasing_pattern(int k);
/// (d+1)(d+2)...k 1 2 ... d
Perm rotated_pattern(int k, int d);
/// 2 1 3 4 ... k (k >= 2)
Perm pattern_213k(int k);

}  // namespace rperm

#endif  // RPERM_PERM_HPP
