#include "rperm/ratfunc.hpp"

#include <stdexcept>

namespace rperm {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RatFunc RatFunc::x_pow(int k) {
  if (k >= 0) return RatFunc(Poly::monomial(1, k));
  return RatFunc(Poly::constant(1), Poly::monomial(1, -k));
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
  }
  Rational s = den_.primitive_scale();
  if (s != 1) {
    num_ *= s;
    den_ *= s;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Cross-cancel first so the gcd in normalize works on smaller inputs.
  Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_constant()) {
    Poly g = gcd(an, bd);
    if (!g.is_constant()) {
      an = an.divide_exact(g);
      bd = bd.divide_exact(g);
    }
  }
  if (!ad.is_constant()) {
    Poly g = gcd(bn, ad);
    if (!g.is_constant()) {
      bn = bn.divide_exact(g);
      ad = ad.divide_exact(g);
    }
  }
  RatFunc r;
  r.num_ = an * bn;
  r.den_ = ad * bd;
  Rational s = r.den_.primitive_scale();
  if (s != 1) {
    r.num_ *= s;
    r.den_ *= s;
  }
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  RatFunc inv;
  inv.num_ = b.den_;
  inv.den_ = b.num_;
  Rational s = inv.den_.primitive_scale();
  inv.num_ *= s;
  inv.den_ *= s;
  return a * inv;
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return RatFunc(1) / pow(-e);
  RatFunc result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

RatFunc RatFunc::substitute(Substitution kind) const {
  switch (kind) {
    case Substitution::kNeg:
      return RatFunc(num_.negate_var(), den_.negate_var());
    case Substitution::kSquare:
      return RatFunc(num_.substitute_monomial(1, 2), den_.substitute_monomial(1, 2));
    case Substitution::kNegSquare:
      return RatFunc(num_.substitute_monomial(-1, 2), den_.substitute_monomial(-1, 2));
  }
  throw std::logic_error("unknown substitution");
}

std::pair<Poly, Poly> RatFunc::display_form() const {
  if (den_.coeff(den_.valuation()) > 0) return {num_, den_};
  return {-num_, -den_};
}

std::string RatFunc::to_string() const {
  if (den_ == Poly::constant(1)) return num_.to_string();
  const auto [n, d] = display_form();
  return "(" + n.to_string() + ")/(" + d.to_string() + ")";
}

std::pair<RatFunc, RatFunc> even_odd_part(const RatFunc& f) {
  const RatFunc g = f.neg();
  const RatFunc half(Rational(1, 2));
  return {(f + g) * half, (f - g) * half};
}

RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
    case ArithOp::kDiv: return a / b;
  }
  throw std::logic_error("unknown arithmetic op");
}

}  // namespace rperm
