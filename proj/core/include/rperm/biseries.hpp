#ifndef RPERM_BISERIES_HPP
#define RPERM_BISERIES_HPP

#include <vector>

#include "rperm/poly.hpp"
#include "rperm/series.hpp"

namespace rperm {

/// Power series in x, truncated after x^order, whose coefficients are exact
/// polynomials in a marker variable y.
class BiSeries {
 public:
  explicit BiSeries(int order = 0);
  /// Embeds a univariate series (y-degree 0).
  static BiSeries from_series(const Series& s);
  /// c(y) * x^k
  static BiSeries monomial(const Poly& y_coeff, int k, int order);

  int order() const { return order_; }
  /// Polynomial in y multiplying x^n.
  const Poly& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  Poly& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }
  Rational coeff(int n, int ypow) const { return (*this)[n].coeff(ypow); }

  BiSeries operator-() const;
  friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const BiSeries& a, const Rational& c);
  /// The x^0 coefficient of b must be a nonzero constant (a unit in Q[y]);
  /// throws std::domain_error otherwise.
  friend BiSeries operator/(const BiSeries& a, const BiSeries& b);
  friend bool operator==(const BiSeries&, const BiSeries&) = default;

  /// Multiply every coefficient by the polynomial c(y).
  BiSeries scale_y(const Poly& c) const;
  BiSeries shift(int k) const;
  /// Evaluate y at a value, giving a univariate series.
  Series at_y(const Rational& y) const;

 private:
  std::vector<Poly> coeffs_;
  int order_;
};

inline BiSeries biseries_add(const BiSeries& a, const BiSeries& b) { return a + b; }
inline BiSeries biseries_mul(const BiSeries& a, const BiSeries& b) { return a * b; }

}  // namespace rperm

#endif  // RPERM_BISERIES_HPP
