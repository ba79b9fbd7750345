#include "rperm/oracle.hpp"

#include "rperm/pattern_matcher.hpp"

namespace rperm {

namespace {

using Sink = FunctionRef<void(Parity)>;

// Writes every 132-avoider on values base+1..base+len into buf[0..len).
void fill(int* buf, int len, int base, Sink done) {
  if (len == 0) {
    done(Parity::kEven);
    return;
  }
  for (int j = 0; j < len; ++j) {
    const int rest = len - 1 - j;
    const Parity split = ((j + 1) * rest) % 2 == 0 ? Parity::kEven : Parity::kOdd;
    buf[j] = base + len;
    fill(buf, j, base + rest, [&](Parity beta) {
      fill(buf + j + 1, rest, base, [&](Parity gamma) { done(combine(combine(beta, gamma), split)); });
    });
  }
}

class Filter {
 public:
  Filter(const std::vector<Perm>& avoid, const std::optional<ContainSpec>& contain) {
    for (const Perm& p : avoid) avoid_.emplace_back(p);
    if (contain) {
      contain_.emplace(contain->pattern);
      target_ = contain->count;
    }
  }

  bool accepts(std::span<const int> p) const {
    for (const PatternMatcher& m : avoid_)
      if (m.occurs_in(p)) return false;
    if (contain_ && contain_->count(p) != target_) return false;
    return true;
  }

 private:
  std::vector<PatternMatcher> avoid_;
  std::optional<PatternMatcher> contain_;
  std::int64_t target_ = 0;
};

void check_bound(int n, int bound) {
  if (n < 0) throw std::invalid_argument("length must be non-negative");
  if (n > bound)
    throw BoundExceeded("oracle length " + std::to_string(n) + " exceeds the bound " + std::to_string(bound));
}

void tally(ParityCounts& c, Parity p) { (p == Parity::kEven ? c.even : c.odd) += 1; }

}  // namespace

void generate_132_avoiders(int n, AvoiderVisitor visit) {
  if (n < 0) throw std::invalid_argument("length must be non-negative");
  std::vector<int> buf(static_cast<std::size_t>(n));
  const std::span<const int> view(buf.data(), buf.size());
  fill(buf.data(), n, 0, [&](Parity p) { visit(view, p); });
}

std::int64_t OracleResult::selected(ParityFilter parity) const {
  switch (parity) {
    case ParityFilter::kEven: return counts.even;
    case ParityFilter::kOdd: return counts.odd;
    case ParityFilter::kBoth: break;
  }
  return counts.total();
}

OracleResult oracle_count(const OracleQuery& q, int max_n) {
  check_bound(q.n, max_n);
  const Filter filter(q.avoid, q.contain);
  OracleResult result;
  generate_132_avoiders(q.n, [&](std::span<const int> p, Parity parity) {
    if (!filter.accepts(p)) return;
    tally(result.counts, parity);
    if (q.statistic) tally(result.distribution[statistic(p, *q.statistic)], parity);
  });
  return result;
}

ParitySeries oracle_series(const std::vector<Perm>& avoid, const std::optional<ContainSpec>& contain, int max_n,
                           int bound) {
  check_bound(max_n, bound);
  const Filter filter(avoid, contain);
  ParitySeries out{Series(max_n), Series(max_n)};
  for (int n = 0; n <= max_n; ++n) {
    ParityCounts c;
    generate_132_avoiders(n, [&](std::span<const int> p, Parity parity) {
      if (filter.accepts(p)) tally(c, parity);
    });
    out.even[n] = Rational(static_cast<long>(c.even));
    out.odd[n] = Rational(static_cast<long>(c.odd));
  }
  return out;
}

ParityBiSeries oracle_distribution(const std::vector<Perm>& avoid, const Statistic& which, int max_n, int bound) {
  check_bound(max_n, bound);
  const Filter filter(avoid, std::nullopt);
  ParityBiSeries out{BiSeries(max_n), BiSeries(max_n)};
  for (int n = 0; n <= max_n; ++n) {
    std::map<std::int64_t, ParityCounts> hist;
    generate_132_avoiders(n, [&](std::span<const int> p, Parity parity) {
      if (filter.accepts(p)) tally(hist[statistic(p, which)], parity);
    });
    for (const auto& [value, c] : hist) {
      const int ypow = static_cast<int>(value);
      out.even[n] += Poly::monomial(Rational(static_cast<long>(c.even)), ypow);
      out.odd[n] += Poly::monomial(Rational(static_cast<long>(c.odd)), ypow);
    }
  }
  return out;
}

}  // namespace rperm
