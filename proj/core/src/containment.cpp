#include "rperm/containment.hpp"

#include <stdexcept>

#include "rperm/decomposition.hpp"

namespace rperm {

ParitySeries contain_once_component(const Perm& once, const std::optional<Perm>& avoid, int order, int bound) {
  std::vector<Perm> avoid_list;
  if (avoid) avoid_list.push_back(*avoid);
  return oracle_series(avoid_list, ContainSpec{once, 1}, order, bound);
}

namespace {

struct Term {
  Series a, b;  // left part, even / odd
  Series c, d;  // right part, even / odd
};

Series reflect(const Series& s) { return s.neg(); }

}  // namespace

std::vector<EquationCheck> verify_containment_equations(const Perm& tau, int order, PrefixConvention convention,
                                                        int bound) {
  if (tau.size() > 5) throw std::invalid_argument("containment equations are checked for patterns of length <= 5");
  const CanonicalDecomposition dec(tau);
  const int r = dec.r();

  std::vector<int> first = dec.blocks()[0].segment;
  first.push_back(dec.blocks()[0].maximum);
  const Perm first_block = normalize(first);

  std::vector<Term> terms;
  for (int j = 0; j <= r + 1; ++j) {
    const Perm left_once = j == 0 ? Perm{} : dec.prefix(j - 1);
    std::optional<Perm> left_avoid;
    if (j <= r) left_avoid = dec.prefix(j);
    if (j == 1 && convention == PrefixConvention::kCorrected) left_avoid = first_block;
    const Perm right_once = dec.suffix(j);
    std::optional<Perm> right_avoid;
    if (j > 0) right_avoid = dec.suffix(j - 1);
    ParitySeries left = contain_once_component(left_once, left_avoid, order, bound);
    ParitySeries right = contain_once_component(right_once, right_avoid, order, bound);
    terms.push_back({left.even, left.odd, right.even, right.odd});
  }

  const ParitySeries whole = contain_once_component(tau, std::nullopt, order, bound);
  const Series& E = whole.even;
  const Series& O = whole.odd;
  const Series M = E - O;
  const Rational h(1, 2);

  Series s14(order), s15(order), s16(order), s17(order), s18(order), s19(order), sg(order);
  for (const Term& t : terms) {
    const Series an = reflect(t.a), bn = reflect(t.b), cn = reflect(t.c), dn = reflect(t.d);
    s14 = s14 + t.a * t.c + an * cn + t.b * t.d + bn * dn;
    s15 = s15 + t.a * t.d + an * dn + t.b * t.c + bn * cn;
    s16 = s16 + ((t.a + an) * (t.d - dn) + (t.b + bn) * (t.c - cn) + (t.a - an) * (t.c + cn) +
                 (t.b - bn) * (t.d + dn)) * h;
    s17 = s17 + ((t.a + an) * (t.c - cn) + (t.b + bn) * (t.d - dn) + (t.a - an) * (t.d + dn) +
                 (t.b - bn) * (t.c + cn)) * h;
    const Series ml = t.a - t.b, mr = t.c - t.d;
    s18 = s18 + ml * mr + reflect(ml) * reflect(mr);
    s19 = s19 + ml * reflect(mr) - reflect(ml) * mr;
    sg = sg + (t.a + t.b) * (t.c + t.d);
  }

  std::vector<EquationCheck> out;
  auto add = [&](std::string name, Series lhs, const Series& sum) {
    Series rhs = sum.shift(1);
    const bool pass = lhs == rhs;
    out.push_back({std::move(name), std::move(lhs), std::move(rhs), pass});
  };
  add("even-difference", E - reflect(E), s14);
  add("odd-difference", O - reflect(O), s15);
  add("even-sum", E + reflect(E), s16);
  add("odd-sum", O + reflect(O), s17);
  add("signed-difference", M - reflect(M), s18);
  add("signed-sum", M + reflect(M), s19);
  add("total", E + O, sg);
  return out;
}

}  // namespace rperm
