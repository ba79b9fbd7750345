#include <gtest/gtest.h>

#include "support/printers.hpp"

#include "rperm/containment.hpp"
#include "support/naive.hpp"

using namespace rperm;

namespace {

bool all_pass(const std::vector<EquationCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

}  // namespace

TEST(Containment, ComponentMatchesNaive) {
  const naive::Seq once{2, 1}, avoid{1, 2, 3};
  const ParitySeries s = contain_once_component(Perm(once), Perm(avoid), 8);
  for (int n = 0; n <= 8; ++n) {
    const auto c = naive::count(n, [&](const naive::Seq& p) {
      return naive::occurrences(p, once) == 1 && naive::occurrences(p, avoid) == 0;
    });
    EXPECT_EQ(s.even[n], Rational(static_cast<long>(c.even)));
    EXPECT_EQ(s.odd[n], Rational(static_cast<long>(c.odd)));
  }
}

TEST(Containment, EmptyPatternConventions) {
  const ParitySeries nothing = contain_once_component(Perm::parse("12"), Perm{}, 6);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(nothing.even[n] + nothing.odd[n], 0);
  const ParitySeries everything = contain_once_component(Perm{}, std::nullopt, 6);
  const auto c = naive::catalan(6);
  for (int n = 0; n <= 6; ++n)
    EXPECT_EQ(everything.even[n] + everything.odd[n], Rational(static_cast<long>(c[static_cast<std::size_t>(n)])));
}

TEST(Containment, EquationsHoldForSmallPatterns) {
  for (const char* tau : {"12", "21", "123", "213"}) {
    const auto checks = verify_containment_equations(Perm::parse(tau), 10);
    EXPECT_EQ(checks.size(), 7u);
    for (const auto& c : checks) EXPECT_TRUE(c.pass) << tau << " " << c.name;
  }
}

TEST(Containment, TotalForTwelve) {
  // Left side of the total equation against a direct count.
  const auto checks = verify_containment_equations(Perm::parse("12"), 8);
  const EquationCheck* total = nullptr;
  for (const auto& c : checks)
    if (c.name == "total") total = &c;
  ASSERT_NE(total, nullptr);
  for (int n = 0; n <= 8; ++n) {
    const auto c = naive::count(n, [](const naive::Seq& p) { return naive::occurrences(p, {1, 2}) == 1; });
    EXPECT_EQ(total->lhs[n], Rational(static_cast<long>(c.even + c.odd))) << n;
  }
}

TEST(Containment, LiteralPrefixConventionFails) {
  EXPECT_TRUE(all_pass(verify_containment_equations(Perm::parse("12"), 8, PrefixConvention::kLiteral)));
  EXPECT_FALSE(all_pass(verify_containment_equations(Perm::parse("21"), 8, PrefixConvention::kLiteral)));
  EXPECT_FALSE(all_pass(verify_containment_equations(Perm::parse("213"), 8, PrefixConvention::kLiteral)));
}

TEST(Containment, RejectsLongPatterns) {
  EXPECT_THROW(verify_containment_equations(Perm::identity(6), 6), std::invalid_argument);
}
