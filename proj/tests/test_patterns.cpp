#include <gtest/gtest.h>

#include "support/printers.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "rperm/decomposition.hpp"
#include "rperm/oracle.hpp"
#include "rperm/perm.hpp"
#include "support/naive.hpp"

using namespace rperm;

namespace {

std::vector<int> random_perm(std::mt19937& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::vector<Perm> all_132_avoiders(int n) {
  std::vector<Perm> out;
  for (const auto& p : naive::avoiders(n)) out.emplace_back(p);
  return out;
}

}  // namespace

TEST(Perm, ParseForms) {
  EXPECT_EQ(Perm::parse("2,1,3,4"), Perm::parse("2134"));
  EXPECT_EQ(Perm::parse(""), Perm{});
  EXPECT_EQ(Perm::parse("e"), Perm{});
  EXPECT_EQ(Perm::parse("10,1,2,3,4,5,6,7,8,9").size(), 10);
  EXPECT_THROW(Perm::parse("1,1"), std::invalid_argument);
  EXPECT_THROW(Perm::parse("13"), std::invalid_argument);
  EXPECT_THROW(Perm::parse("1,x"), std::invalid_argument);
  EXPECT_EQ(Perm::parse("4132").to_string(), "4132");
  EXPECT_EQ(Perm::parse("10,1,2,3,4,5,6,7,8,9").to_string(), "10,1,2,3,4,5,6,7,8,9");
}

TEST(Perm, Sign) {
  EXPECT_EQ(sign(Perm::parse("4132")), Parity::kEven);
  EXPECT_EQ(inversions(Perm::parse("4132").entries()), 4);
  EXPECT_EQ(sign(Perm::parse("1")), Parity::kEven);
  EXPECT_EQ(sign(Perm::parse("21")), Parity::kOdd);
}

TEST(Perm, Occurrences) {
  const Perm p = Perm::parse("598376412");
  // (5,9,8,7), (5,9,8,6), (5,9,7,6), (5,8,7,6), (3,7,6,4)
  EXPECT_EQ(occurrences(p.entries(), Perm::parse("1432")), 5);
  EXPECT_EQ(occurrences(p.entries(), Perm::parse("123")), 0);
  EXPECT_TRUE(avoids(p.entries(), Perm::parse("123")));
  const Perm t = Perm::parse("31524");
  EXPECT_EQ(occurrences(t.entries(), t), 1);
}

TEST(Perm, Normalize) {
  const std::vector<int> a{5, 9, 8}, b{3, 4, 1, 2}, dup{2, 2};
  EXPECT_EQ(normalize(a), Perm::parse("132"));
  EXPECT_EQ(normalize(std::vector<int>{}), Perm{});
  EXPECT_EQ(normalize(b), Perm::parse("3412"));
  EXPECT_THROW(normalize(dup), std::invalid_argument);
}

TEST(Perm, Statistics) {
  EXPECT_EQ(right_to_left_maxima(Perm::parse("4132").entries()), 3);
  EXPECT_EQ(right_to_left_maxima(Perm::identity(7).entries()), 1);
  EXPECT_EQ(increasing_occurrences(Perm::parse("231").entries(), 2), 1);
  EXPECT_EQ(statistic(Perm::parse("231").entries(), Statistic::inc(2)), 1);
  EXPECT_EQ(statistic(Perm::parse("4132").entries(), Statistic::rlm()), 3);
}

TEST(Perm, Families) {
  EXPECT_EQ(rotated_pattern(5, 2), Perm::parse("34512"));
  EXPECT_EQ(rotated_pattern(3, 0), Perm::parse("123"));
  EXPECT_EQ(pattern_213k(4), Perm::parse("2134"));
  EXPECT_THROW(pattern_213k(1), std::invalid_argument);
}

TEST(PermProperty, OccurrencesAgreeWithNaive) {
  std::mt19937 rng(20260101);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const int k = 1 + static_cast<int>(rng() % 4);
    const auto p = random_perm(rng, n);
    const auto tau = random_perm(rng, k);
    const std::int64_t got = occurrences(p, Perm(tau));
    EXPECT_EQ(got, naive::occurrences(p, tau));
    EXPECT_EQ(got == 0, avoids(p, Perm(tau)));
  }
}

TEST(PermProperty, IncreasingOccurrencesAgreeWithMatcher) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_perm(rng, 1 + static_cast<int>(rng() % 10));
    const int j = 1 + static_cast<int>(rng() % 4);
    naive::Seq inc(static_cast<std::size_t>(j));
    std::iota(inc.begin(), inc.end(), 1);
    EXPECT_EQ(increasing_occurrences(p, j), naive::occurrences(p, inc));
  }
}

TEST(PermProperty, SignSplitsAtMaximum) {
  // p = beta n gamma with beta of length j: sign = (-1)^{(j+1)(n-1)} sign(beta) sign(gamma).
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    auto p = random_perm(rng, n);
    const auto top = std::find(p.begin(), p.end(), n);
    const std::vector<int> beta(p.begin(), top), gamma(top + 1, p.end());
    // Force the shape used by 132-avoiders: beta above gamma.
    std::vector<int> lifted;
    const int j = static_cast<int>(beta.size());
    const Perm low = normalize(gamma), high = normalize(beta);
    for (int v : high.entries()) lifted.push_back(v + n - 1 - j);
    lifted.push_back(n);
    for (int v : low.entries()) lifted.push_back(v);
    const Parity split = combine(combine(sign(high), sign(low)),
                                 ((j + 1) * (n - 1)) % 2 == 0 ? Parity::kEven : Parity::kOdd);
    EXPECT_EQ(sign(lifted), split);
    EXPECT_EQ(sign(lifted) == Parity::kEven, naive::is_even(lifted));
  }
}

TEST(Decomposition, Examples) {
  const CanonicalDecomposition d(Perm::parse("3412"));
  EXPECT_EQ(d.r(), 1);
  ASSERT_EQ(d.blocks().size(), 2u);
  EXPECT_EQ(d.blocks()[0].segment, std::vector<int>{3});
  EXPECT_EQ(d.blocks()[0].maximum, 4);
  EXPECT_EQ(d.blocks()[1].segment, std::vector<int>{1});
  EXPECT_EQ(d.blocks()[1].maximum, 2);
  EXPECT_EQ(d.prefix(-1), Perm{});
  EXPECT_EQ(d.prefix(0), Perm::parse("1"));
  EXPECT_EQ(d.prefix(1), Perm::parse("3412"));
  EXPECT_EQ(d.suffix(0), Perm::parse("3412"));
  EXPECT_EQ(d.suffix(1), Perm::parse("12"));
  EXPECT_EQ(d.suffix(2), Perm{});

  const CanonicalDecomposition inc(Perm::identity(5));
  EXPECT_EQ(inc.r(), 0);
  EXPECT_EQ(inc.blocks()[0].segment, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(inc.blocks()[0].maximum, 5);

  const CanonicalDecomposition dec(Perm::parse("321"));
  EXPECT_EQ(dec.r(), 2);
  for (int i = 0; i <= 2; ++i) {
    EXPECT_TRUE(dec.blocks()[static_cast<std::size_t>(i)].segment.empty());
    EXPECT_EQ(dec.blocks()[static_cast<std::size_t>(i)].maximum, 3 - i);
  }
}

TEST(Decomposition, Rejects) {
  EXPECT_THROW(CanonicalDecomposition(Perm::parse("132")), std::invalid_argument);
  EXPECT_THROW(CanonicalDecomposition(Perm{}), std::invalid_argument);
}

TEST(DecompositionProperty, InvariantsForAllSmallAvoiders) {
  for (int n = 1; n <= 7; ++n) {
    for (const Perm& tau : all_132_avoiders(n)) {
      const CanonicalDecomposition d(tau);
      const auto flat = d.flatten();
      EXPECT_EQ(flat, std::vector<int>(tau.entries().begin(), tau.entries().end()));
      const auto& b = d.blocks();
      EXPECT_EQ(b.front().maximum, n);
      EXPECT_EQ(d.r() + 1, right_to_left_maxima(tau.entries()));
      for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        for (int v : b[i].segment) {
          EXPECT_GT(v, b[i + 1].maximum);
          for (int w : b[i + 1].segment) EXPECT_GT(v, w);
        }
      }
      EXPECT_EQ(d.suffix(0), tau);
      if (d.r() >= 1) EXPECT_EQ(d.prefix(d.r()), tau);
    }
  }
}

TEST(Generate, SmallCases) {
  std::vector<std::string> seen;
  generate_132_avoiders(3, [&](std::span<const int> p, Parity) { seen.push_back(Perm({p.begin(), p.end()}).to_string()); });
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(seen, (std::vector<std::string>{"123", "213", "231", "312", "321"}));

  int empty_calls = 0;
  generate_132_avoiders(0, [&](std::span<const int> p, Parity par) {
    ++empty_calls;
    EXPECT_TRUE(p.empty());
    EXPECT_EQ(par, Parity::kEven);
  });
  EXPECT_EQ(empty_calls, 1);
}

TEST(GenerateProperty, MatchesNaiveEnumerationWithParity) {
  for (int n = 0; n <= 8; ++n) {
    std::vector<std::vector<int>> got;
    generate_132_avoiders(n, [&](std::span<const int> p, Parity par) {
      got.emplace_back(p.begin(), p.end());
      EXPECT_EQ(par == Parity::kEven, naive::is_even(got.back()));
    });
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, naive::avoiders(n)) << n;
  }
}

TEST(GenerateProperty, CatalanCountsToFourteen) {
  const auto c = catalan_series(14);
  for (int n = 0; n <= 14; ++n) {
    std::int64_t count = 0;
    generate_132_avoiders(n, [&](std::span<const int>, Parity) { ++count; });
    EXPECT_EQ(Rational(static_cast<long>(count)), c[n]) << n;
  }
}

TEST(Oracle, Examples) {
  OracleQuery q{3, {Perm::parse("123")}, std::nullopt, ParityFilter::kBoth, std::nullopt};
  EXPECT_EQ(oracle_count(q).selected(ParityFilter::kBoth), 4);

  OracleQuery two{2, {Perm::parse("12")}, std::nullopt, ParityFilter::kEven, std::nullopt};
  const auto r = oracle_count(two);
  EXPECT_EQ(r.selected(ParityFilter::kEven), 0);
  EXPECT_EQ(r.selected(ParityFilter::kOdd), 1);

  OracleQuery once{3, {}, ContainSpec{Perm::parse("123"), 1}, ParityFilter::kEven, std::nullopt};
  EXPECT_EQ(oracle_count(once).selected(ParityFilter::kEven), 1);

  OracleQuery plain{3, {Perm::parse("132")}, std::nullopt, ParityFilter::kEven, std::nullopt};
  EXPECT_EQ(oracle_count(plain).selected(ParityFilter::kEven), 3);
}

TEST(Oracle, BoundIsEnforced) {
  OracleQuery q{15, {}, std::nullopt, ParityFilter::kBoth, std::nullopt};
  EXPECT_THROW(oracle_count(q), BoundExceeded);
  OracleQuery small{6, {}, std::nullopt, ParityFilter::kBoth, std::nullopt};
  EXPECT_THROW(oracle_count(small, 5), BoundExceeded);
}

TEST(Oracle, Distribution) {
  OracleQuery q{4, {}, std::nullopt, ParityFilter::kBoth, Statistic::rlm()};
  const auto r = oracle_count(q);
  std::map<int, naive::Counts> want;
  for (const auto& p : naive::avoiders(4)) (naive::is_even(p) ? want[naive::rlm(p)].even : want[naive::rlm(p)].odd)++;
  ASSERT_EQ(r.distribution.size(), want.size());
  for (const auto& [k, c] : want) {
    EXPECT_EQ(r.distribution.at(k).even, c.even);
    EXPECT_EQ(r.distribution.at(k).odd, c.odd);
  }
}

TEST(OracleProperty, AgreesWithNaiveFilters) {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng() % 8);
    const auto avoid = random_perm(rng, 2 + static_cast<int>(rng() % 3));
    std::optional<ContainSpec> contain;
    naive::Seq contain_tau;
    std::int64_t contain_count = 0;
    if (rng() % 2) {
      contain_tau = random_perm(rng, 1 + static_cast<int>(rng() % 3));
      contain_count = static_cast<std::int64_t>(rng() % 3);
      contain = ContainSpec{Perm(contain_tau), contain_count};
    }
    OracleQuery q{n, {Perm(avoid)}, contain, ParityFilter::kBoth, std::nullopt};
    const auto got = oracle_count(q);
    const auto want = naive::count(n, [&](const naive::Seq& p) {
      if (naive::occurrences(p, avoid) != 0) return false;
      return !contain || naive::occurrences(p, contain_tau) == contain_count;
    });
    EXPECT_EQ(got.counts.even, want.even);
    EXPECT_EQ(got.counts.odd, want.odd);
    EXPECT_EQ(got.selected(ParityFilter::kBoth), got.counts.even + got.counts.odd);
  }
}

TEST(OracleProperty, DistributionSumsToTotals) {
  for (int n = 0; n <= 9; ++n) {
    OracleQuery q{n, {Perm::parse("1234")}, std::nullopt, ParityFilter::kBoth, Statistic::inc(2)};
    const auto r = oracle_count(q);
    std::int64_t e = 0, o = 0;
    for (const auto& [k, c] : r.distribution) {
      e += c.even;
      o += c.odd;
    }
    EXPECT_EQ(e, r.counts.even);
    EXPECT_EQ(o, r.counts.odd);
  }
}
