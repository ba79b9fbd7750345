#include "rperm/engine.hpp"

#include <stdexcept>

#include "rperm/decomposition.hpp"
#include "rperm/linear.hpp"

namespace rperm {

namespace {

// coef * unknown + constant
struct Affine {
  RatFunc coef;
  RatFunc constant;
};

Affine known(RatFunc v) { return {RatFunc(), std::move(v)}; }
Affine operator-(const Affine& a, const Affine& b) { return {a.coef - b.coef, a.constant - b.constant}; }
Affine operator*(const Affine& a, const Affine& b) {
  if (!a.coef.is_zero() && !b.coef.is_zero()) throw std::logic_error("recursion is not linear in F");
  return {a.coef * b.constant + a.constant * b.coef, a.constant * b.constant};
}

// a * A + b * B + c, with A = M(x) and B = M(-x).
struct Affine2 {
  RatFunc a;
  RatFunc b;
  RatFunc c;
};

Affine2 known2(RatFunc v) { return {RatFunc(), RatFunc(), std::move(v)}; }
Affine2 operator+(const Affine2& u, const Affine2& v) { return {u.a + v.a, u.b + v.b, u.c + v.c}; }
Affine2 operator-(const Affine2& u, const Affine2& v) { return {u.a - v.a, u.b - v.b, u.c - v.c}; }
Affine2 operator*(const Affine2& u, const Affine2& v) {
  const bool u_lin = !u.a.is_zero() || !u.b.is_zero();
  const bool v_lin = !v.a.is_zero() || !v.b.is_zero();
  if (u_lin && v_lin) throw std::logic_error("recursion is not linear in M");
  return {u.a * v.c + u.c * v.a, u.b * v.c + u.c * v.b, u.c * v.c};
}
Affine2 scale(const Affine2& u, const RatFunc& s) { return {u.a * s, u.b * s, u.c * s}; }

}  // namespace

const GFTriple* Engine::lookup(const Perm& tau) const {
  std::lock_guard lock(mutex_);
  auto it = memo_.find(tau);
  return it == memo_.end() ? nullptr : &it->second;
}

std::size_t Engine::memo_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

GFTriple Engine::component(const Perm& tau) {
  if (tau.empty()) return {};
  return gftriple(tau);
}

const GFTriple& Engine::gftriple(const Perm& tau) {
  if (const GFTriple* hit = lookup(tau)) return *hit;
  GFTriple t;
  t.F = solve_F(tau);
  t.M = solve_M(tau);
  const RatFunc half(Rational(1, 2));
  t.E = (t.F + t.M) * half;
  t.O = (t.F - t.M) * half;
  std::lock_guard lock(mutex_);
  return memo_.try_emplace(tau, std::move(t)).first->second;
}

RatFunc Engine::solve_F(const Perm& tau) {
  const CanonicalDecomposition dec(tau);
  auto value = [&](const Perm& p) { return p == tau ? Affine{RatFunc(1), RatFunc()} : known(component(p).F); };
  Affine sum = known(RatFunc());
  for (int d = 0; d <= dec.r(); ++d) {
    const Affine term = (value(dec.prefix(d)) - value(dec.prefix(d - 1))) * value(dec.suffix(d));
    sum = {sum.coef + term.coef, sum.constant + term.constant};
  }
  // F = 1 + x * sum
  const RatFunc x = RatFunc::x();
  const RatFunc lhs = RatFunc(1) - x * sum.coef;
  if (lhs.is_zero()) throw std::domain_error("singular recursion for " + tau.to_string());
  return (RatFunc(1) + x * sum.constant) / lhs;
}

RatFunc Engine::solve_M(const Perm& tau) {
  const CanonicalDecomposition dec(tau);
  auto at_x = [&](const Perm& p) {
    return p == tau ? Affine2{RatFunc(1), RatFunc(), RatFunc()} : known2(component(p).M);
  };
  auto at_neg = [&](const Perm& p) {
    return p == tau ? Affine2{RatFunc(), RatFunc(1), RatFunc()} : known2(component(p).M.neg());
  };
  Affine2 diff = known2(RatFunc());  // sum for M(x) - M(-x)
  Affine2 plus = known2(RatFunc());  // sum for M(x) + M(-x) - 2
  for (int d = 0; d <= dec.r(); ++d) {
    const Affine2 delta = at_x(dec.prefix(d)) - at_x(dec.prefix(d - 1));
    const Affine2 delta_neg = at_neg(dec.prefix(d)) - at_neg(dec.prefix(d - 1));
    const Affine2 s = at_x(dec.suffix(d));
    const Affine2 s_neg = at_neg(dec.suffix(d));
    diff = diff + delta * s + delta_neg * s_neg;
    plus = plus + delta * s_neg - delta_neg * s;
  }
  const RatFunc x = RatFunc::x();
  diff = scale(diff, x);
  plus = scale(plus, x);
  // A - B = diff,  A + B - 2 = plus
  auto [A, B] = solve_linear_2x2(RatFunc(1) - diff.a, RatFunc(-1) - diff.b, RatFunc(1) - plus.a,
                                 RatFunc(1) - plus.b, diff.c, plus.c + RatFunc(2));
  if (A.neg() != B) throw std::logic_error("inconsistent solution for M of " + tau.to_string());
  return A;
}

Engine& default_engine() {
  static Engine engine;
  return engine;
}

}  // namespace rperm
