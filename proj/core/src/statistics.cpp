#include <stdexcept>

#include "rperm/oracle.hpp"

namespace rperm {

std::int64_t statistic(std::span<const int> p, const Statistic& which) {
  switch (which.kind) {
    case Statistic::Kind::kRightToLeftMaxima: return right_to_left_maxima(p);
    case Statistic::Kind::kIncreasing: return increasing_occurrences(p, which.j);
    case Statistic::Kind::kOccurrences: return occurrences(p, which.pattern);
  }
  throw std::logic_error("unknown statistic");
}

std::string to_string(const Statistic& which) {
  switch (which.kind) {
    case Statistic::Kind::kRightToLeftMaxima: return "rlm";
    case Statistic::Kind::kIncreasing: return "inc:" + std::to_string(which.j);
    case Statistic::Kind::kOccurrences: return "occ:" + which.pattern.to_string();
  }
  return "?";
}

}  // namespace rperm
