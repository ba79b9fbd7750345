#ifndef RPERM_ENGINE_HPP
#define RPERM_ENGINE_HPP

#include <map>
#include <mutex>

#include "rperm/perm.hpp"
#include "rperm/ratfunc.hpp"

namespace rperm {

/// Generating functions of the 132-avoiders that also avoid one pattern:
/// F counts all of them, E the even ones, O the odd ones, M = E - O.
struct GFTriple {
  RatFunc F;
  RatFunc M;
  RatFunc E;
  RatFunc O;
  friend bool operator==(const GFTriple&, const GFTriple&) = default;
};

/// Solves the block recursions for F and M over the canonical decomposition,
/// memoized by normalized pattern. Safe to call from several threads; a value
/// computed twice concurrently is stored once and the copies are identical.
class Engine {
 public:
  /// tau must be nonempty and avoid 132 (std::invalid_argument otherwise).
  const GFTriple& gftriple(const Perm& tau);
  RatFunc F_tau(const Perm& tau) { return gftriple(tau).F; }
  RatFunc M_tau(const Perm& tau) { return gftriple(tau).M; }

  std::size_t memo_size() const;

 private:
  const GFTriple* lookup(const Perm& tau) const;
  // Zero for the empty pattern: no permutation avoids it.
  GFTriple component(const Perm& tau);
  RatFunc solve_F(const Perm& tau);
  RatFunc solve_M(const Perm& tau);

  mutable std::mutex mutex_;
  std::map<Perm, GFTriple> memo_;
};

/// Shared process-wide engine.
Engine& default_engine();

inline GFTriple gftriple(const Perm& tau) { return default_engine().gftriple(tau); }
inline RatFunc F_tau(const Perm& tau) { return default_engine().F_tau(tau); }
inline RatFunc M_tau(const Perm& tau) { return default_engine().M_tau(tau); }

}  // namespace rperm

#endif  // RPERM_ENGINE_HPP
