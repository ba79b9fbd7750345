#include "rperm/closed_forms.hpp"

#include <stdexcept>

#include "rperm/chebyshev.hpp"

namespace rperm {

namespace {

const RatFunc& X() {
  static const RatFunc x = RatFunc::x();
  return x;
}

RatFunc half(const RatFunc& f) { return f * RatFunc(Rational(1, 2)); }

// R_k(x^2)
RatFunc Rsq(int k) { return R(k).sq(); }

// U_n(1/(2x))
RatFunc u(int n) { return chebyshev_U_at_half_inverse(n); }

RatFunc W(int n) { return RatFunc(cleared_W(n)); }
RatFunc Wsq(int n) { return RatFunc(cleared_U(n)); }

// M of an odd-length increasing or odd-wedge pattern of length 2k+1.
RatFunc odd_M(int k) { return RatFunc(1) + X() * Rsq(k); }

Series one_series(int order) {
  Series s(order);
  s[0] = 1;
  return s;
}

BiSeries expand(const RatFunc& f, const Poly& y_coeff, int order) {
  return BiSeries::from_series(series_expand(f, order)).scale_y(y_coeff);
}

}  // namespace

GFTriple triple_from(RatFunc F, RatFunc M) {
  GFTriple t;
  t.E = half(F + M);
  t.O = half(F - M);
  t.F = std::move(F);
  t.M = std::move(M);
  return t;
}

RatFunc closed_mmc(const Perm& beta) {
  const RatFunc m = beta.empty() ? RatFunc() : M_tau(beta);
  const RatFunc a = RatFunc(1) - X() * m;
  const RatFunc b = RatFunc(1) + X() * m.neg();
  return RatFunc(2) * b / (a * a + b * b);
}

ParitySeries closed_unrestricted(int order) {
  const Series c = catalan_series(order);
  const Series one = one_series(order);
  const Series tail = c.sq().shift(1);
  const Rational h(1, 2);
  return {(c + one) * h + tail * h, (c - one) * h - tail * h};
}

GFTriple closed_increasing(int len) {
  if (len < 1) throw std::invalid_argument("increasing pattern length must be >= 1");
  if (len % 2 == 1) return triple_from(R(len), odd_M((len - 1) / 2));
  const int k = len / 2;
  const RatFunc r = Rsq(k);
  return triple_from(R(len), (RatFunc(1) + X() * r) * r / (RatFunc(1) + X().pow(2) * r * r));
}

GFTriple closed_213k(int len) {
  if (len < 2) throw std::invalid_argument("2134...k pattern length must be >= 2");
  const RatFunc x2 = X().pow(2);
  const RatFunc q = RatFunc(1) - RatFunc(3) * x2;
  const RatFunc shared = (x2 + RatFunc(2) * X() - RatFunc(1)) / q;
  const RatFunc lead = RatFunc(1) + RatFunc(2) * X();
  RatFunc M;
  if (len % 2 == 0) {
    const int k = len / 2;
    M = lead * (u(2 * k - 1) - u(2 * k) + shared) /
        (u(2 * k) - RatFunc(2) * X() * u(2 * k + 1) + RatFunc(4) * X().pow(4) / q);
  } else {
    const int k = (len + 1) / 2;
    M = lead * (u(2 * k - 2) - u(2 * k - 1) + shared) /
        (u(2 * k - 1) - RatFunc(2) * X() * u(2 * k) - RatFunc(2) * X() * (RatFunc(1) - RatFunc(5) * x2) / q);
  }
  return triple_from(R(len), M);
}

std::string to_string(KdCase c) {
  switch (c) {
    case KdCase::kOddOdd: return "odd-odd";
    case KdCase::kOddEven: return "odd-even";
    case KdCase::kEvenOdd: return "even-odd";
    case KdCase::kEvenEven: return "even-even";
  }
  return "?";
}

KdCase kd_case(int len, int d) {
  if (len % 2 == 1) return d % 2 == 1 ? KdCase::kOddOdd : KdCase::kOddEven;
  return d % 2 == 1 ? KdCase::kEvenOdd : KdCase::kEvenEven;
}

GFTriple closed_kd(int len, int d) {
  if (len < 2 || d < 1 || d > len - 1) throw std::invalid_argument("[k,d] needs k >= 2 and 1 <= d <= k-1");
  const RatFunc x2 = X().pow(2);
  switch (kd_case(len, d)) {
    case KdCase::kOddOdd:
    case KdCase::kOddEven:
      return triple_from(R(len), odd_M((len - 1) / 2));
    case KdCase::kEvenOdd: {
      const int k = len / 2, h = (d - 1) / 2, m = k - h - 1;
      const RatFunc rm = Rsq(m), rd = Rsq(h);
      const RatFunc num = (RatFunc(1) - x2 * (rm + rd) + X() * (RatFunc(1) - x2 * rm * rd)) * (RatFunc(1) + x2 * rm * rd);
      const RatFunc den = RatFunc(1) - x2 * (RatFunc(1) + rm * rm) * (RatFunc(1) + x2 * rm * rm);
      return triple_from(R(len), num / den);
    }
    case KdCase::kEvenEven: {
      const int k = len / 2, h = d / 2, m = k - h - 1;
      const RatFunc rm = Rsq(m), rd = Rsq(h);
      const RatFunc num = (RatFunc(1) - x2 * (rm - rd)) *
                          (RatFunc(1) - x2 * (rd + rm) - X() * (RatFunc(1) - x2 * rd * rm));
      const RatFunc den =
          X() + X().pow(3) * (RatFunc(1) + x2 * rd * rd) * (RatFunc(1) - RatFunc(2) * rm + x2 * rm * rm);
      return triple_from(R(len), RatFunc::x_pow(-1) - num / den);
    }
  }
  throw std::logic_error("unreachable");
}

bool is_odd_wedge(const Perm& tau) {
  const int len = tau.size();
  if (len % 2 == 0 || contains(tau.entries(), Perm({1, 3, 2}))) return false;
  for (int s = 0; s < len; ++s) {
    if (tau[0] <= s) continue;
    bool ok = true;
    int last_top = s;
    int floor = s + 1;  // every low run must sit below the previous one
    for (int i = 0; i < len && ok; ++i) {
      const int v = tau[i];
      if (v > s) {
        ok = v > last_top;
        last_top = v;
        // A run of tops followed by a run of lows ends a pair; its length must be odd.
        if (i > 0 && tau[i - 1] <= s && i % 2 == 0) ok = false;
      } else if (i > 0 && tau[i - 1] <= s) {
        ok = v == tau[i - 1] + 1;  // a low run is one layer of consecutive values
      } else {
        ok = v < floor;
      }
      if (v <= s && (i + 1 == len || tau[i + 1] > s)) {
        // Close the low run: the next one has to lie entirely below its start.
        int start = i;
        while (start > 0 && tau[start - 1] <= s) --start;
        floor = tau[start];
      }
    }
    if (ok && len % 2 == 1) return true;
  }
  return false;
}

std::optional<GFTriple> odd_wedge(const Perm& tau) {
  if (!is_odd_wedge(tau)) return std::nullopt;
  const int len = tau.size();
  return triple_from(R(len), odd_M((len - 1) / 2));
}

RatFunc contain_once_total(int len) { return RatFunc::x_pow(len) / W(len).pow(2); }

ContainGF contain_once_increasing(int len) {
  if (len < 1) throw std::invalid_argument("pattern length must be >= 1");
  RatFunc M;
  if (len % 2 == 1) {
    const int m = (len - 1) / 2;
    M = RatFunc::x_pow(2 * m + 1) / Wsq(m).pow(2);
  } else {
    const int m = (len - 2) / 2;
    const RatFunc r = Rsq(m + 1);
    const RatFunc x2r2 = X().pow(2) * r * r;
    M = X().pow(2) * r * r / (RatFunc(1) + x2r2).pow(2) * RatFunc::x_pow(2 * m) / Wsq(m).pow(2) *
        (RatFunc(1) + RatFunc(2) * X() * r - x2r2);
  }
  const RatFunc G = contain_once_total(len);
  return {M, half(G + M), half(G - M)};
}

RatFunc contain_twice_total_printed(int k) {
  return RatFunc::x_pow(k + 1) * W(k - 1) / W(k).pow(3);
}

RatFunc contain_twice_total(int k) {
  const int K = 2 * k + 1;
  return RatFunc::x_pow(K + 1) * W(K - 1) / W(K).pow(3);
}

ContainGF contain_r_increasing(int k, int r) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const int K = 2 * k + 1;
  switch (r) {
    case 0: {
      const GFTriple t = closed_increasing(K);
      return {t.M, t.E, t.O};
    }
    case 1: return contain_once_increasing(K);
    case 2: {
      const RatFunc M = RatFunc::x_pow(2 * k + 2) / Wsq(k).pow(2) * (X() * Rsq(k) - RatFunc(1));
      const RatFunc G = contain_twice_total(k);
      return {M, half(G + M), half(G - M)};
    }
    default: throw std::invalid_argument("r must be 0, 1 or 2");
  }
}

ParityBiSeries rlm_distribution(int order) {
  const Poly y = Poly::x();
  const Series c = catalan_series(order);
  const BiSeries one = BiSeries::from_series(one_series(order));
  const BiSeries yc1 = BiSeries::from_series(c).shift(1).scale_y(y);         // x y C(x)
  const BiSeries yc2 = BiSeries::from_series(c.sq()).shift(2).scale_y(y);    // x^2 y C(x^2)
  const BiSeries a = one / (one - yc1);
  const BiSeries xy = BiSeries::monomial(y, 1, order);
  const BiSeries b = (one + xy - yc2) / (one - yc2 * Rational(2) + yc2.scale_y(y));
  const Rational h(1, 2);
  return {(a + b) * h, (a - b) * h};
}

RatFunc two_restriction_W(int m) {
  if (m < 3) throw std::invalid_argument("W_m needs m >= 3");
  const RatFunc x2 = X().pow(2);
  return (RatFunc(1) - x2 * R(m - 2) * R(m - 3)) * R(m - 1) / (RatFunc(1) - x2 * R(m - 1) * R(m - 2));
}

GFTriple two_restrictions(int len) {
  if (len < 4) throw std::invalid_argument("two-restriction length must be >= 4");
  const RatFunc F = two_restriction_W(len);
  if (len % 2 == 0) return triple_from(F, RatFunc(1) + X() * Rsq(len / 2));
  const int k = (len - 1) / 2;
  const RatFunc r1 = Rsq(k + 1);
  const RatFunc v = (RatFunc(1) - X() * two_restriction_W(2 * k)) * two_restriction_W(2 * k + 1);
  const RatFunc T = (RatFunc(2) * (RatFunc(1) + X() * r1) - v - X() * r1 * v.neg()) /
                    (RatFunc(1) + X().pow(2) * r1 * r1) * r1;
  return triple_from(F, T);
}

RatFunc gk_D(int m) {
  if (m < -2) throw std::invalid_argument("D_m needs m >= -2");
  const RatFunc q = RatFunc(1) - RatFunc(4) * X().pow(2);
  if (m % 2 == 0) {
    const int h = m / 2;
    return RatFunc::x_pow(2 * h + 1) / q * (u(2 * h + 1) - RatFunc(2) * X() * u(2 * h) - RatFunc(2) * X());
  }
  const int h = (m - 1) / 2;
  return RatFunc::x_pow(2 * h + 3) / q * (u(2 * h + 3) - u(2 * h + 1) - RatFunc(4) * X());
}

BiSeries Gk_xy(int k, int order) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const RatFunc x2 = X().pow(2);
  const RatFunc B = k % 2 == 0 ? -RatFunc::x_pow(k - 1) : RatFunc(2) * RatFunc::x_pow(k) - RatFunc::x_pow(k - 1);
  const RatFunc Ek = k % 2 == 0 ? RatFunc() : RatFunc(-2) * RatFunc::x_pow(k + 1);
  const Poly one_minus_y{1, -1};
  const Poly sq = one_minus_y * one_minus_y;
  const Poly unit{1};
  const BiSeries num = expand(gk_D(k - 1) - RatFunc::x_pow(k), unit, order) + expand(B, one_minus_y, order) +
                       expand(x2 * (gk_D(k - 3) - RatFunc::x_pow(k - 2)), sq, order);
  const BiSeries den =
      expand(gk_D(k), unit, order) + expand(Ek, one_minus_y, order) + expand(x2 * gk_D(k - 2), sq, order);
  return BiSeries::from_series(one_series(order)) + (num / den).shift(1);
}

RatFunc Gk_at_one(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return RatFunc(1) + X() * (gk_D(k - 1) - RatFunc::x_pow(k)) / gk_D(k);
}

Integer fibonacci(int n) {
  if (n < 0) throw std::invalid_argument("fibonacci index must be >= 0");
  Integer a = 1, b = 1;
  for (int i = 0; i < n; ++i) {
    Integer c = a + b;
    a = b;
    b = c;
  }
  return a;
}

}  // namespace rperm
