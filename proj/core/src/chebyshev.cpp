#include "rperm/chebyshev.hpp"

#include <stdexcept>

namespace rperm {

Poly chebyshev_U(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev_U: negative index");
  Poly prev = Poly::constant(1);
  if (n == 0) return prev;
  const Poly two_t = Poly::monomial(2, 1);
  Poly cur = two_t;
  for (int i = 2; i <= n; ++i) {
    Poly next = two_t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RatFunc R(int k) {
  if (k < 0) throw std::invalid_argument("R: negative index");
  RatFunc r(0);
  const RatFunc x = RatFunc::x();
  for (int i = 1; i <= k; ++i) r = RatFunc(1) / (RatFunc(1) - x * r);
  return r;
}

Poly cleared_W(int n) {
  if (n < 0) throw std::invalid_argument("cleared_W: negative index");
  Poly prev = Poly::constant(1);
  Poly cur = Poly::constant(1);
  if (n <= 1) return cur;
  const Poly x = Poly::x();
  for (int i = 2; i <= n; ++i) {
    Poly next = cur - x * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly cleared_U(int n) { return cleared_W(n).substitute_monomial(1, 2); }

RatFunc chebyshev_U_at_half_inverse(int n) {
  if (n == -1) return RatFunc(0);
  if (n == -2) return RatFunc(-1);
  if (n < -2) throw std::invalid_argument("chebyshev_U_at_half_inverse: index below -2");
  return RatFunc(cleared_U(n), Poly::monomial(1, n));
}

IdentityVerdict verify_identity(ChebIdentity which, int p, int q) {
  IdentityVerdict v{which, p, q, {}, {}, false};
  const RatFunc x = RatFunc::x();
  switch (which) {
    case ChebIdentity::kContinuedFraction:
      if (p < 1) throw std::invalid_argument("identity index must be >= 1");
      v.lhs = R(p);
      v.rhs = RatFunc(1) / (RatFunc(1) - x * R(p - 1));
      break;
    case ChebIdentity::kClearedRatio:
      if (p < 1) throw std::invalid_argument("identity index must be >= 1");
      v.lhs = R(p);
      v.rhs = RatFunc(cleared_W(p - 1), cleared_W(p));
      break;
    case ChebIdentity::kProduct:
    case ChebIdentity::kSum: {
      if (p < 0 || q < 0) throw std::invalid_argument("identity indices must be >= 0");
      const RatFunc x2 = x * x;
      const RatFunc rp = R(p).sq();
      const RatFunc rq = R(q).sq();
      const Poly denom = cleared_U(p) * cleared_U(q);
      if (which == ChebIdentity::kProduct) {
        v.lhs = RatFunc(1) - x2 * rp * rq;
        v.rhs = RatFunc(cleared_U(p + q), denom);
      } else {
        v.lhs = RatFunc(1) - x2 * (rp + rq);
        v.rhs = RatFunc(cleared_U(p + q + 1), denom);
      }
      break;
    }
  }
  v.pass = (v.lhs == v.rhs);
  return v;
}

std::vector<IdentityVerdict> identity_suite(int max_k, int max_pq) {
  std::vector<IdentityVerdict> out;
  for (int k = 1; k <= max_k; ++k) {
    out.push_back(verify_identity(ChebIdentity::kContinuedFraction, k));
    out.push_back(verify_identity(ChebIdentity::kClearedRatio, k));
  }
  for (int p = 0; p <= max_pq; ++p)
    for (int q = 0; q <= max_pq; ++q) {
      out.push_back(verify_identity(ChebIdentity::kProduct, p, q));
      out.push_back(verify_identity(ChebIdentity::kSum, p, q));
    }
  return out;
}

std::string to_string(ChebIdentity which) {
  switch (which) {
    case ChebIdentity::kContinuedFraction: return "continued-fraction";
    case ChebIdentity::kClearedRatio: return "cleared-ratio";
    case ChebIdentity::kProduct: return "product";
    case ChebIdentity::kSum: return "sum";
  }
  return "unknown";
}

}  // namespace rperm
