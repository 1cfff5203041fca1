#ifndef ZEL_ORACLE_HPP
#define ZEL_ORACLE_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "zel/multisegment.hpp"
#include "zel/speh_params.hpp"

namespace zel {

// Independent re-derivation of the composition factors of the twisted Speh
// product. Nothing in here may call r_multisegment, valid_j_range or the
// compose_* functions: those are what the oracle is checked against.

/// z(s1) x z(s2): {(s1,s2)} when unlinked, otherwise also the
/// (union, intersection) pair. Sorted. Throws LineMismatch.
std::vector<Multisegment> segment_product(const Segment& s1, const Segment& s2);

/// The end multiset forced on a factor with `cb` segments: the ends of every
/// upper segment plus the ends of the first cb - n lower segments.
/// Throws OutOfRange unless n <= cb <= 2n.
CuspSupport end_multiset_constraint(const SpehPairParams& p, int cb);

/// ends(b), negated, equals beginnings(b).
bool symmetry_constraint(const Multisegment& b);

/// mw_dual(mw_dual(a_-) + mw_dual(a_+)) when d <= k <= n + d - 1.
std::optional<Multisegment> short_factor(const SpehPairParams& p);

struct FactorCertificate {
  Multisegment factor;
  std::string source;                // "irreducible", "segment_product", "transpose", "derivative", "short_factor"
  std::vector<std::string> filters;  // filters the candidate passed, in order
  std::optional<Multisegment> matched;  // the (n,d-1,k) factor, twisted, its h.d. hit
};

struct OracleResult {
  int n = 1;
  int d = 1;
  int k = 0;
  Line line;
  std::vector<Multisegment> factors;  // sorted
  std::vector<FactorCertificate> certificates;  // parallel to factors
};

struct OracleOptions {
  ClosureOptions closure;
};

/// Memoizing oracle. compose() is safe to call from several threads; the
/// cache lock is never held while a cell is being computed.
class Oracle {
 public:
  explicit Oracle(OracleOptions opts = {}) : opts_(opts) {}

  OracleResult compose(int n, int d, int k, Line line = Line{});

 private:
  using Key = std::tuple<int, int, int, std::string>;

  OracleResult compute(int n, int d, int k, const Line& line);

  OracleOptions opts_;
  std::mutex mu_;
  std::map<Key, OracleResult> cache_;
};

/// One-shot oracle with a fresh cache. Throws OutOfRange for n or d < 1 or
/// k < 0, ClosureTooLarge past the node cap.
OracleResult oracle_composition(int n, int d, int k, const OracleOptions& opts = {},
                                Line line = Line{});

}  // namespace zel

#endif  // ZEL_ORACLE_HPP
