#include "rperm/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rperm {

namespace {

using ZVec = std::vector<Integer>;

void trim_z(ZVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Integer content(const ZVec& v) {
  Integer g = 0;
  for (const auto& c : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(ZVec& v) {
  if (v.empty()) return;
  Integer g = content(v);
  if (v.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

ZVec to_primitive_integer(const Poly& p) {
  Rational s = p.primitive_scale();
  ZVec out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Rational v = c * s;
    out.push_back(v.get_num());
  }
  make_primitive(out);
  return out;
}

// Pseudo-remainder of a by b, in place on a.
void pseudo_rem(ZVec& a, const ZVec& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    Integer la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
    trim_z(a);
  }
}

}  // namespace

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int k) {
  if (k < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

int Poly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return 0;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  Poly r;
  r.coeffs_ = std::move(out);
  r.trim();
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = a;
  if (a.degree() < b.degree()) return {Poly{}, rem};
  const std::size_t db = b.coeffs_.size() - 1;
  std::vector<Rational> q(rem.coeffs_.size() - db);
  const Rational inv_lead = 1 / b.leading();
  while (!rem.is_zero() && rem.coeffs_.size() - 1 >= db) {
    const std::size_t shift = rem.coeffs_.size() - 1 - db;
    Rational f = rem.coeffs_.back() * inv_lead;
    q[shift] = f;
    for (std::size_t i = 0; i <= db; ++i) rem.coeffs_[shift + i] -= f * b.coeffs_[i];
    rem.trim();
  }
  return {Poly(std::move(q)), rem};
}

Poly Poly::divide_exact(const Poly& b) const {
  auto [q, r] = divmod(*this, b);
  if (!r.is_zero()) throw std::domain_error("Poly::divide_exact: nonzero remainder");
  return q;
}

Poly Poly::negate_var() const {
  Poly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

Poly Poly::substitute_monomial(const Rational& c, int k) const {
  if (k < 1) throw std::invalid_argument("Poly::substitute_monomial: k must be >= 1");
  if (is_zero()) return {};
  std::vector<Rational> out((coeffs_.size() - 1) * static_cast<std::size_t>(k) + 1);
  Rational power = 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i * static_cast<std::size_t>(k)] = coeffs_[i] * power;
    power *= c;
  }
  return Poly(std::move(out));
}

Poly Poly::shift(int k) const {
  if (k < 0) throw std::invalid_argument("Poly::shift: negative shift");
  if (is_zero()) return {};
  Poly r;
  r.coeffs_.assign(static_cast<std::size_t>(k), Rational(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

Rational Poly::eval(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Rational Poly::primitive_scale() const {
  if (is_zero()) return 1;
  Integer l = 1;
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& c : coeffs_) {
    Integer n = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (leading() < 0) g = -g;
  Rational s(l, g);
  s.canonicalize();
  return s;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const bool unit = (mag == 1);
    if (i == 0 || !unit) os << mag.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  ZVec u = to_primitive_integer(a);
  ZVec v = to_primitive_integer(b);
  if (u.empty()) return Poly(std::vector<Rational>(v.begin(), v.end()));
  if (v.empty()) return Poly(std::vector<Rational>(u.begin(), u.end()));
  if (u.size() < v.size()) std::swap(u, v);
  // Primitive polynomial remainder sequence.
  while (!v.empty()) {
    if (v.size() == 1) return Poly::constant(1);
    pseudo_rem(u, v);
    make_primitive(u);
    std::swap(u, v);
  }
  return Poly(std::vector<Rational>(u.begin(), u.end()));
}

}  // namespace rperm
