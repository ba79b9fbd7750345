#ifndef RPERM_POLY_HPP
#define RPERM_POLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace rperm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficient i multiplies x^i. Trailing zeros are always trimmed, so the
/// zero polynomial has an empty coefficient vector and two polynomials are
/// equal exactly when their coefficient vectors are.
class Poly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<long> coeffs);
  static Poly constant(const Rational& c);
  /// c * x^k
  static Poly monomial(const Rational& c, int k);
  static Poly x() { return monomial(1, 1); }

  int degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Coefficient of x^i; zero outside the stored range.
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
  int valuation() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Euclidean division over Q. Throws std::domain_error for a zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Exact quotient; throws std::domain_error if the remainder is nonzero.
  Poly divide_exact(const Poly& b) const;

  /// p(-x)
  Poly negate_var() const;
  /// p(c * x^k) for k >= 1
  Poly substitute_monomial(const Rational& c, int k) const;
  /// p(x) * x^k, k >= 0
  Poly shift(int k) const;
  Rational eval(const Rational& at) const;

  /// Least common multiple of coefficient denominators divided by the gcd of
  /// coefficient numerators; multiplying by it yields a primitive integer
  /// polynomial with the same sign of the leading coefficient.
  Rational primitive_scale() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic-free gcd: the result is a primitive integer polynomial with positive
/// leading coefficient (or zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace rperm

#endif  // RPERM_POLY_HPP
