#include "rperm/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace rperm {

Series::Series(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

Series::Series(std::vector<Rational> coeffs, int order) : Series(order) {
  const std::size_t n = std::min(coeffs.size(), coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) coeffs_[i] = std::move(coeffs[i]);
}

Series Series::from_poly(const Poly& p, int order) { return Series(p.coeffs(), order); }

Series Series::truncate(int order) const {
  if (order > order_) throw std::invalid_argument("cannot raise series order by truncation");
  return Series(coeffs_, order);
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Series operator+(const Series& a, const Series& b) {
  Series r(std::min(a.order_, b.order_));
  for (int i = 0; i <= r.order_; ++i) r[i] = a[i] + b[i];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  Series r(std::min(a.order_, b.order_));
  for (int i = 0; i <= r.order_; ++i) r[i] = a[i] - b[i];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  Series r(std::min(a.order_, b.order_));
  for (int i = 0; i <= r.order_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= r.order_; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Series operator*(const Series& a, const Rational& c) {
  Series r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Series operator/(const Series& a, const Series& b) {
  if (b[0] == 0) throw std::domain_error("series division by a series with zero constant term");
  Series q(std::min(a.order_, b.order_));
  const Rational inv = 1 / b[0];
  for (int n = 0; n <= q.order_; ++n) {
    Rational acc = a[n];
    for (int j = 1; j <= n; ++j) acc -= b[j] * q[n - j];
    q[n] = acc * inv;
  }
  return q;
}

Series Series::shift(int k) const {
  Series r(order_);
  for (int i = 0; i + k <= order_; ++i) r[i + k] = coeffs_[static_cast<std::size_t>(i)];
  return r;
}

Series Series::neg() const {
  Series r = *this;
  for (int i = 1; i <= order_; i += 2) r[i] = -r[i];
  return r;
}

Series Series::sq() const {
  Series r(order_);
  for (int i = 0; 2 * i <= order_; ++i) r[2 * i] = coeffs_[static_cast<std::size_t>(i)];
  return r;
}

bool Series::all_integer() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

bool Series::all_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c >= 0; });
}

Series series_expand(const RatFunc& f, int order) {
  if (f.den().coeff(0) == 0) throw std::domain_error("no power-series expansion");
  return Series::from_poly(f.num(), order) / Series::from_poly(f.den(), order);
}

Series catalan_series(int order) {
  Series c(order);
  c[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int j = 0; j < n; ++j) acc += c[j] * c[n - 1 - j];
    c[n] = acc;
  }
  return c;
}

}  // namespace rperm
