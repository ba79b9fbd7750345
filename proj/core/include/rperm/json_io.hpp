#ifndef RPERM_JSON_IO_HPP
#define RPERM_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "rperm/biseries.hpp"
#include "rperm/poly.hpp"
#include "rperm/ratfunc.hpp"
#include "rperm/series.hpp"

namespace rperm {

// Coefficients are written as decimal strings ("p" or "p/q"), lowest power
// first, so arbitrarily large values survive a JSON round trip unchanged.

nlohmann::json to_json(const Poly& p);
/// {"num": [...], "den": [...]}
nlohmann::json to_json(const RatFunc& f);
nlohmann::json to_json(const Series& s);
/// One array of y-coefficients per power of x.
nlohmann::json to_json(const BiSeries& s);

Poly poly_from_json(const nlohmann::json& j);
RatFunc ratfunc_from_json(const nlohmann::json& j);

}  // namespace rperm

#endif  // RPERM_JSON_IO_HPP
