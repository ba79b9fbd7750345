#ifndef RPERM_DECOMPOSITION_HPP
#define RPERM_DECOMPOSITION_HPP

#include <vector>

#include "rperm/perm.hpp"

namespace rperm {

/// One block of a canonical decomposition: a segment followed by the
/// right-to-left maximum that closes it. Values are those of the original
/// pattern (not normalized).
struct Block {
  std::vector<int> segment;
  int maximum = 0;
};

/// Splitting of a nonempty 132-avoiding pattern along its right-to-left
/// maxima: tau = seg_0 max_0 seg_1 max_1 ... seg_r max_r.
///
/// prefix(i) for -1 <= i <= r: prefix(-1) is empty, prefix(0) is the
/// normalized seg_0 alone, prefix(i) for i >= 1 is the normalized
/// seg_0 max_0 ... seg_i max_i (so prefix(r) is tau when r >= 1).
/// suffix(i) for 0 <= i <= r+1: the normalized seg_i max_i ... seg_r max_r,
/// with suffix(0) = tau and suffix(r+1) empty.
class CanonicalDecomposition {
 public:
  /// Throws std::invalid_argument for the empty pattern or one containing 132.
  explicit CanonicalDecomposition(const Perm& tau);

  const Perm& pattern() const { return tau_; }
  int r() const { return static_cast<int>(blocks_.size()) - 1; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Perm& prefix(int i) const { return prefixes_[static_cast<std::size_t>(i + 1)]; }
  const Perm& suffix(int i) const { return suffixes_[static_cast<std::size_t>(i)]; }

  /// Concatenation of the blocks, which reproduces the pattern.
  std::vector<int> flatten() const;

 private:
  Perm tau_;
  std::vector<Block> blocks_;
  std::vector<Perm> prefixes_;
  std::vector<Perm> suffixes_;
};

inline CanonicalDecomposition canonical_decomposition(const Perm& tau) { return CanonicalDecomposition(tau); }

}  // namespace rperm

#endif  // RPERM_DECOMPOSITION_HPP
