#ifndef RPERM_SERIES_HPP
#define RPERM_SERIES_HPP

#include <vector>

#include "rperm/poly.hpp"
#include "rperm/ratfunc.hpp"

namespace rperm {

/// Power series in x truncated after x^order.
///
/// Binary operations produce a result whose order is the smaller of the two
/// operand orders.
class Series {
 public:
  explicit Series(int order = 0);
  Series(std::vector<Rational> coeffs, int order);
  static Series from_poly(const Poly& p, int order);

  int order() const { return order_; }
  const Rational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Same series cut down to a smaller order.
  Series truncate(int order) const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Rational& c);
  /// Requires b[0] != 0; throws std::domain_error otherwise.
  friend Series operator/(const Series& a, const Series& b);
  friend bool operator==(const Series&, const Series&) = default;

  /// x^k * s (the order is kept; high terms fall off).
  Series shift(int k) const;
  /// s(-x)
  Series neg() const;
  /// s(x^2); the order is kept, so only the first half of s is used.
  Series sq() const;

  bool all_integer() const;
  bool all_nonnegative() const;

 private:
  std::vector<Rational> coeffs_;
  int order_;
};

/// Taylor coefficients of f at 0 through x^order.
/// Throws std::domain_error("no power-series expansion") when den(0) == 0.
Series series_expand(const RatFunc& f, int order);

/// Catalan numbers C_0..C_order, computed from C = 1 + x C^2.
Series catalan_series(int order);

}  // namespace rperm

#endif  // RPERM_SERIES_HPP
