#ifndef RPERM_ORACLE_HPP
#define RPERM_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "rperm/biseries.hpp"
#include "rperm/perm.hpp"
#include "rperm/series.hpp"

namespace rperm {

/// Non-owning reference to a callable, cheap to pass down a recursion.
template <typename Sig>
class FunctionRef;

template <typename R, typename... Args>
class FunctionRef<R(Args...)> {
 public:
  template <typename F, typename = std::enable_if_t<!std::is_same_v<std::decay_t<F>, FunctionRef>>>
  FunctionRef(F&& f)  // NOLINT
      : obj_(const_cast<void*>(static_cast<const void*>(&f))),
        call_([](void* obj, Args... args) -> R {
          return (*static_cast<std::remove_reference_t<F>*>(obj))(std::forward<Args>(args)...);
        }) {}

  R operator()(Args... args) const { return call_(obj_, std::forward<Args>(args)...); }

 private:
  void* obj_;
  R (*call_)(void*, Args...);
};

using AvoiderVisitor = FunctionRef<void(std::span<const int>, Parity)>;

/// Calls visit once for every 132-avoiding permutation of length n, with its
/// parity. Each permutation is built as beta n gamma where beta holds the j
/// letters just below n; parity follows from
/// sign = (-1)^{(j+1)(n-1)} sign(beta) sign(gamma).
/// The span is only valid during the call.
void generate_132_avoiders(int n, AvoiderVisitor visit);

enum class ParityFilter { kEven, kOdd, kBoth };

struct ContainSpec {
  Perm pattern;
  std::int64_t count = 0;
};

struct Statistic {
  enum class Kind { kRightToLeftMaxima, kIncreasing, kOccurrences };
  Kind kind = Kind::kRightToLeftMaxima;
  int j = 0;        ///< length of the increasing pattern for kIncreasing
  Perm pattern;     ///< for kOccurrences

  static Statistic rlm() { return {Kind::kRightToLeftMaxima, 0, {}}; }
  static Statistic inc(int j) { return {Kind::kIncreasing, j, {}}; }
  static Statistic occurrences_of(Perm p) { return {Kind::kOccurrences, 0, std::move(p)}; }
};

std::int64_t statistic(std::span<const int> p, const Statistic& which);
std::string to_string(const Statistic& which);

struct OracleQuery {
  int n = 0;
  /// 132 is always implied; listing it again is harmless.
  std::vector<Perm> avoid;
  std::optional<ContainSpec> contain;
  ParityFilter parity = ParityFilter::kBoth;
  std::optional<Statistic> statistic;
};

struct ParityCounts {
  std::int64_t even = 0;
  std::int64_t odd = 0;
  std::int64_t total() const { return even + odd; }
};

struct OracleResult {
  ParityCounts counts;
  /// Filled only when a statistic was requested; keyed by statistic value.
  std::map<std::int64_t, ParityCounts> distribution;
  /// even, odd or total according to the query's parity filter.
  std::int64_t selected(ParityFilter parity) const;
};

class BoundExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Largest length the oracle enumerates unless the caller raises it.
inline constexpr int kDefaultOracleBound = 14;

/// Throws BoundExceeded when q.n > max_n.
OracleResult oracle_count(const OracleQuery& q, int max_n = kDefaultOracleBound);

/// Even and odd counting series through x^max_n for one constraint set.
struct ParitySeries {
  Series even;
  Series odd;
};
ParitySeries oracle_series(const std::vector<Perm>& avoid, const std::optional<ContainSpec>& contain, int max_n,
                           int bound = kDefaultOracleBound);

/// Even and odd distributions of a statistic, y marking the statistic value.
struct ParityBiSeries {
  BiSeries even;
  BiSeries odd;
};
ParityBiSeries oracle_distribution(const std::vector<Perm>& avoid, const Statistic& which, int max_n,
                                   int bound = kDefaultOracleBound);

}  // namespace rperm

#endif  // RPERM_ORACLE_HPP
