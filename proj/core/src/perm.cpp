#include "rperm/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "rperm/pattern_matcher.hpp"

namespace rperm {

std::string to_string(Parity p) { return p == Parity::kEven ? "even" : "odd"; }

Perm::Perm(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty() || text == "e") return Perm{};
  std::vector<int> v;
  if (text.find(',') == std::string_view::npos) {
    if (text.size() > 9) throw std::invalid_argument("compact pattern form is limited to length 9");
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad pattern syntax: " + std::string(text));
      v.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(pos, end - pos);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("bad pattern syntax: " + std::string(text));
      v.push_back(value);
      pos = end + 1;
    }
  }
  return Perm(std::move(v));
}

Perm Perm::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

std::string Perm::to_string() const {
  std::string s;
  const bool compact = size() <= 9;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!compact && i > 0) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s;
}

Perm normalize(std::span<const int> segment) {
  std::vector<int> sorted(segment.begin(), segment.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("normalize: values must be distinct");
  std::vector<int> out;
  out.reserve(segment.size());
  for (int v : segment)
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  return Perm(std::move(out));
}

std::int64_t inversions(std::span<const int> p) {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++count;
  return count;
}

Parity sign(std::span<const int> p) { return inversions(p) % 2 == 0 ? Parity::kEven : Parity::kOdd; }

std::int64_t occurrences(std::span<const int> p, const Perm& tau) { return PatternMatcher(tau).count(p); }

bool contains(std::span<const int> p, const Perm& tau) { return PatternMatcher(tau).occurs_in(p); }

int right_to_left_maxima(std::span<const int> p) {
  int count = 0;
  int best = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (*it > best) {
      best = *it;
      ++count;
    }
  }
  return count;
}

std::int64_t increasing_occurrences(std::span<const int> p, int j) {
  if (j < 1) throw std::invalid_argument("increasing_occurrences: j must be >= 1");
  const std::size_t n = p.size();
  // ending[i][l]: increasing subsequences of length l+1 ending at i.
  std::vector<std::vector<std::int64_t>> ending(n, std::vector<std::int64_t>(static_cast<std::size_t>(j), 0));
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ending[i][0] = 1;
    for (std::size_t prev = 0; prev < i; ++prev) {
      if (p[prev] >= p[i]) continue;
      for (int l = 1; l < j; ++l) ending[i][static_cast<std::size_t>(l)] += ending[prev][static_cast<std::size_t>(l - 1)];
    }
    total += ending[i][static_cast<std::size_t>(j - 1)];
  }
  return total;
}

Perm increasing_pattern(int k) { return Perm::identity(k); }

Perm rotated_pattern(int k, int d) {
  if (d < 0 || d > k) throw std::invalid_argument("rotated_pattern: need 0 <= d <= k");
  std::vector<int> v;
  for (int i = d + 1; i <= k; ++i) v.push_back(i);
  for (int i = 1; i <= d; ++i) v.push_back(i);
  return Perm(std::move(v));
}

Perm pattern_213k(int k) {
  if (k < 2) throw std::invalid_argument("pattern_213k: length must be >= 2");
  std::vector<int> v{2, 1};
  for (int i = 3; i <= k; ++i) v.push_back(i);
  return Perm(std::move(v));
}

}  // namespace rperm
