#include "rperm/decomposition.hpp"

#include <stdexcept>

namespace rperm {

CanonicalDecomposition::CanonicalDecomposition(const Perm& tau) : tau_(tau) {
  if (tau.empty()) throw std::invalid_argument("canonical decomposition needs a nonempty pattern");
  if (contains(tau.entries(), Perm({1, 3, 2})))
    throw std::invalid_argument("pattern " + tau.to_string() + " contains 132");

  const int k = tau.size();
  std::vector<bool> is_max(static_cast<std::size_t>(k), false);
  int best = 0;
  for (int i = k - 1; i >= 0; --i) {
    if (tau[i] > best) {
      best = tau[i];
      is_max[static_cast<std::size_t>(i)] = true;
    }
  }
  Block current;
  for (int i = 0; i < k; ++i) {
    if (is_max[static_cast<std::size_t>(i)]) {
      current.maximum = tau[i];
      blocks_.push_back(std::move(current));
      current = Block{};
    } else {
      current.segment.push_back(tau[i]);
    }
  }

  const int r = this->r();
  prefixes_.emplace_back();
  prefixes_.push_back(normalize(blocks_[0].segment));
  std::vector<int> acc = blocks_[0].segment;
  acc.push_back(blocks_[0].maximum);
  for (int i = 1; i <= r; ++i) {
    const Block& b = blocks_[static_cast<std::size_t>(i)];
    acc.insert(acc.end(), b.segment.begin(), b.segment.end());
    acc.push_back(b.maximum);
    prefixes_.push_back(normalize(acc));
  }

  for (int i = 0; i <= r; ++i) {
    std::vector<int> tail;
    for (int j = i; j <= r; ++j) {
      const Block& b = blocks_[static_cast<std::size_t>(j)];
      tail.insert(tail.end(), b.segment.begin(), b.segment.end());
      tail.push_back(b.maximum);
    }
    suffixes_.push_back(normalize(tail));
  }
  suffixes_.emplace_back();
}

std::vector<int> CanonicalDecomposition::flatten() const {
  std::vector<int> out;
  for (const Block& b : blocks_) {
    out.insert(out.end(), b.segment.begin(), b.segment.end());
    out.push_back(b.maximum);
  }
  return out;
}

}  // namespace rperm
