#include "rperm/biseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace rperm {

BiSeries::BiSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

BiSeries BiSeries::from_series(const Series& s) {
  BiSeries r(s.order());
  for (int n = 0; n <= s.order(); ++n) r[n] = Poly::constant(s[n]);
  return r;
}

BiSeries BiSeries::monomial(const Poly& y_coeff, int k, int order) {
  BiSeries r(order);
  if (k >= 0 && k <= order) r[k] = y_coeff;
  return r;
}

BiSeries BiSeries::operator-() const {
  BiSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
  BiSeries r(std::min(a.order_, b.order_));
  for (int n = 0; n <= r.order_; ++n) r[n] = a[n] + b[n];
  return r;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
  BiSeries r(std::min(a.order_, b.order_));
  for (int n = 0; n <= r.order_; ++n) r[n] = a[n] - b[n];
  return r;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  BiSeries r(std::min(a.order_, b.order_));
  for (int i = 0; i <= r.order_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= r.order_; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

BiSeries operator*(const BiSeries& a, const Rational& c) {
  BiSeries r = a;
  for (auto& p : r.coeffs_) p *= c;
  return r;
}

BiSeries operator/(const BiSeries& a, const BiSeries& b) {
  if (b[0].is_zero() || !b[0].is_constant())
    throw std::domain_error("bivariate series division needs a unit constant term in x");
  const Rational inv = 1 / b[0].coeff(0);
  BiSeries q(std::min(a.order_, b.order_));
  for (int n = 0; n <= q.order_; ++n) {
    Poly acc = a[n];
    for (int j = 1; j <= n; ++j) acc -= b[j] * q[n - j];
    q[n] = acc * inv;
  }
  return q;
}

BiSeries BiSeries::scale_y(const Poly& c) const {
  BiSeries r(order_);
  for (int n = 0; n <= order_; ++n) r[n] = (*this)[n] * c;
  return r;
}

BiSeries BiSeries::shift(int k) const {
  BiSeries r(order_);
  for (int n = 0; n + k <= order_; ++n) r[n + k] = (*this)[n];
  return r;
}

Series BiSeries::at_y(const Rational& y) const {
  Series s(order_);
  for (int n = 0; n <= order_; ++n) s[n] = (*this)[n].eval(y);
  return s;
}

}  // namespace rperm
