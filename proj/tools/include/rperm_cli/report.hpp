#ifndef RPERM_CLI_REPORT_HPP
#define RPERM_CLI_REPORT_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace rperm::cli {

enum class Verdict { kPass, kFail, kPaperDiscrepancy };
std::string to_string(Verdict v);

struct CheckRecord {
  std::string family;
  nlohmann::json params;
  std::string source;  ///< the formula or oracle the expectation comes from
  std::string expected;
  std::string observed;
  Verdict verdict = Verdict::kPass;
  double runtime_ms = 0;
};

class Report {
 public:
  void add(CheckRecord r) { records_.push_back(std::move(r)); }
  void append(const Report& other);
  const std::vector<CheckRecord>& records() const { return records_; }

  std::size_t count(Verdict v) const;
  bool has_failure() const { return count(Verdict::kFail) > 0; }

  /// Timings make output run-dependent, so they are opt-in.
  nlohmann::json to_json(bool with_timings) const;
  std::string to_csv(bool with_timings) const;
  std::string to_text() const;

 private:
  std::vector<CheckRecord> records_;
};

}  // namespace rperm::cli

#endif  // RPERM_CLI_REPORT_HPP
