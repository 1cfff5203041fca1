#ifndef ZEL_MULTISEGMENT_HPP
#define ZEL_MULTISEGMENT_HPP

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "zel/half_exp.hpp"
#include "zel/segment.hpp"

namespace zel {

/// A finite multiset of segments on one cuspidal line.
///
/// Segments are kept sorted by (begin, end) with duplicates adjacent, so two
/// multisegments are equal exactly when their sorted vectors are equal. The
/// empty multisegment still carries a line label; msum treats it as the
/// identity regardless of label.
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(Line line) : line_(line) {}
  /// Throws LineMismatch if some segment is not on `line`.
  Multisegment(Line line, std::vector<Segment> segments);
  /// Line is taken from the first segment; the list must be non-empty.
  Multisegment(std::initializer_list<Segment> segments);

  const Line& line() const { return line_; }
  std::span<const Segment> segments() const { return segments_; }
  std::size_t size() const { return segments_.size(); }
  bool empty() const { return segments_.empty(); }
  const Segment& operator[](std::size_t i) const { return segments_[i]; }
  auto begin() const { return segments_.begin(); }
  auto end() const { return segments_.end(); }

  /// Total number of cuspidal points (the degree of Z(a)).
  std::int64_t degree() const;

  std::string to_string() const;  // "([-1,0],[0,1])"

  friend bool operator==(const Multisegment& a, const Multisegment& b) {
    return a.line_ == b.line_ && a.segments_ == b.segments_;
  }
  friend std::strong_ordering operator<=>(const Multisegment& a, const Multisegment& b);

 private:
  Line line_;
  std::vector<Segment> segments_;
};

/// Number of segments (cardinality of the multiset).
inline std::int64_t card(const Multisegment& a) { return static_cast<std::int64_t>(a.size()); }

/// Multiset of cuspidal points, stored as sorted exponents on one line.
struct CuspSupport {
  Line line;
  std::vector<HalfExp> exps;

  std::size_t size() const { return exps.size(); }
  std::vector<CuspidalPoint> points() const;
  std::string to_string() const;  // "{-1,0,0,1}"

  friend bool operator==(const CuspSupport& a, const CuspSupport& b) {
    return a.line == b.line && a.exps == b.exps;
  }
};

CuspSupport make_support(Line line, std::vector<HalfExp> exps);

Multisegment msum(const Multisegment& a1, const Multisegment& a2);
inline Multisegment operator+(const Multisegment& a1, const Multisegment& a2) {
  return msum(a1, a2);
}

/// The Speh multisegment a(n,d) twisted by nu^center: n segments of length
/// d, the i-th shifted by i - 1 - (n-1)/2, forming a ladder.
Multisegment speh(int n, int d, HalfExp center, Line line = Line{});

Multisegment minus_ends(const Multisegment& a);
Multisegment minus_begins(const Multisegment& a);

CuspSupport supp(const Multisegment& a);
CuspSupport beginnings(const Multisegment& a);
CuspSupport ends(const Multisegment& a);

/// Every c with c ≺ a: one linked pair replaced by its union and (non-empty)
/// intersection. Sorted and free of duplicates.
std::vector<Multisegment> elementary_reductions(const Multisegment& a);

struct ClosureOptions {
  std::size_t max_nodes = 1'000'000;
};

/// All b <= a, including a itself, in canonical sorted order.
/// Throws ClosureTooLarge once more than max_nodes multisegments are seen.
std::vector<Multisegment> down_closure(const Multisegment& a, const ClosureOptions& opts = {});

/// b <= a in the order generated by ≺.
bool leq(const Multisegment& b, const Multisegment& a, const ClosureOptions& opts = {});

/// Exponent negation per point (the line is centered).
Multisegment hermitian_dual(const Multisegment& a);
Multisegment contragredient(const Multisegment& a);

Multisegment twist_ms(const Multisegment& a, HalfExp z);

struct MultisegmentHash {
  std::size_t operator()(const Multisegment& a) const noexcept;
};

}  // namespace zel

template <>
struct std::hash<zel::Multisegment> : zel::MultisegmentHash {};

#endif  // ZEL_MULTISEGMENT_HPP
