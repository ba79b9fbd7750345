#include "rperm/json_io.hpp"

#include <stdexcept>

namespace rperm {

namespace {

nlohmann::json coeff_array(const std::vector<Rational>& v) {
  auto arr = nlohmann::json::array();
  for (const auto& c : v) arr.push_back(c.get_str());
  return arr;
}

}  // namespace

nlohmann::json to_json(const Poly& p) {
  if (p.is_zero()) return nlohmann::json::array({"0"});
  return coeff_array(p.coeffs());
}

nlohmann::json to_json(const RatFunc& f) {
  const auto [num, den] = f.display_form();
  return nlohmann::json{{"num", to_json(num)}, {"den", to_json(den)}};
}

nlohmann::json to_json(const Series& s) { return coeff_array(s.coeffs()); }

nlohmann::json to_json(const BiSeries& s) {
  auto arr = nlohmann::json::array();
  for (int n = 0; n <= s.order(); ++n) arr.push_back(to_json(s[n]));
  return arr;
}

Poly poly_from_json(const nlohmann::json& j) {
  std::vector<Rational> v;
  for (const auto& e : j) {
    Rational q(e.get<std::string>());
    q.canonicalize();
    v.push_back(q);
  }
  return Poly(std::move(v));
}

RatFunc ratfunc_from_json(const nlohmann::json& j) {
  return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

}  // namespace rperm
