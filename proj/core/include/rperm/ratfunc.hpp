#ifndef RPERM_RATFUNC_HPP
#define RPERM_RATFUNC_HPP

#include <string>
#include <utility>

#include "rperm/poly.hpp"

namespace rperm {

/// Which variable substitution to apply to a rational function.
enum class Substitution {
  kNeg,        ///< x -> -x
  kSquare,     ///< x -> x^2
  kNegSquare,  ///< x -> -x^2
};

/// Quotient of two polynomials kept in a canonical form.
///
/// Invariants after every operation: the denominator is nonzero, numerator and
/// denominator are coprime, and the denominator is a primitive integer
/// polynomial with positive leading coefficient. Two RatFuncs are equal as
/// functions exactly when their representations are equal.
///
/// A zero constant term in the denominator is allowed (e.g. 1/x); such values
/// can take part in arithmetic but have no power-series expansion.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::constant(1)) {}
  RatFunc(long c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}  // NOLINT
  RatFunc(const Rational& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}  // NOLINT
  RatFunc(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) { normalize(); }  // NOLINT
  /// Throws std::domain_error when den is zero.
  RatFunc(Poly num, Poly den);

  static RatFunc x() { return RatFunc(Poly::x()); }
  /// x^k for any integer k (negative k gives 1/x^-k).
  static RatFunc x_pow(int k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  /// Throws std::domain_error when b is zero.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  RatFunc pow(int e) const;
  RatFunc substitute(Substitution kind) const;
  /// f(-x)
  RatFunc neg() const { return substitute(Substitution::kNeg); }
  /// f(x^2)
  RatFunc sq() const { return substitute(Substitution::kSquare); }

  /// The same quotient with signs flipped, if needed, so that the lowest
  /// nonzero denominator coefficient is positive (1 - 2x rather than -1 + 2x).
  /// Used for printing; the canonical form is unchanged.
  std::pair<Poly, Poly> display_form() const;

  std::string to_string() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

/// Returns (f(x)+f(-x))/2 and (f(x)-f(-x))/2.
std::pair<RatFunc, RatFunc> even_odd_part(const RatFunc& f);

enum class ArithOp { kAdd, kSub, kMul, kDiv };
RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, ArithOp op);

inline RatFunc substitute(const RatFunc& f, Substitution kind) { return f.substitute(kind); }

}  // namespace rperm

#endif  // RPERM_RATFUNC_HPP
