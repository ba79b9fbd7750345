#include "rperm_cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace rperm::cli {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kPaperDiscrepancy: return "paper-discrepancy";
  }
  return "?";
}

void Report::append(const Report& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

std::size_t Report::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [v](const CheckRecord& r) { return r.verdict == v; }));
}

nlohmann::json Report::to_json(bool with_timings) const {
  auto checks = nlohmann::json::array();
  for (const CheckRecord& r : records_) {
    nlohmann::json j{{"family", r.family},     {"params", r.params},   {"source", r.source},
                     {"expected", r.expected}, {"observed", r.observed}, {"verdict", to_string(r.verdict)}};
    if (with_timings) j["runtime_ms"] = r.runtime_ms;
    checks.push_back(std::move(j));
  }
  return nlohmann::json{{"checks", checks},
                        {"summary",
                         {{"pass", count(Verdict::kPass)},
                          {"fail", count(Verdict::kFail)},
                          {"paper-discrepancy", count(Verdict::kPaperDiscrepancy)}}}};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string Report::to_csv(bool with_timings) const {
  std::ostringstream os;
  os << "family,params,source,expected,observed,verdict";
  if (with_timings) os << ",runtime_ms";
  os << '\n';
  for (const CheckRecord& r : records_) {
    os << csv_field(r.family) << ',' << csv_field(r.params.dump()) << ',' << csv_field(r.source) << ','
       << csv_field(r.expected) << ',' << csv_field(r.observed) << ',' << to_string(r.verdict);
    if (with_timings) os << ',' << r.runtime_ms;
    os << '\n';
  }
  return os.str();
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const CheckRecord& r : records_) {
    os << '[' << to_string(r.verdict) << "] " << r.family << ' ' << r.params.dump() << '\n';
    if (r.verdict != Verdict::kPass) {
      os << "    source:   " << r.source << '\n';
      os << "    expected: " << r.expected << '\n';
      os << "    observed: " << r.observed << '\n';
    }
  }
  os << count(Verdict::kPass) << " pass, " << count(Verdict::kFail) << " fail, "
     << count(Verdict::kPaperDiscrepancy) << " paper-discrepancy\n";
  return os.str();
}

}  // namespace rperm::cli
