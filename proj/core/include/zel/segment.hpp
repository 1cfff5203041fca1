#ifndef ZEL_SEGMENT_HPP
#define ZEL_SEGMENT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "zel/half_exp.hpp"

namespace zel {

/// A segment [nu^b rho, nu^e rho] = {nu^b rho, nu^(b+1) rho, ..., nu^e rho}.
///
/// Always non-empty with e - b a non-negative integer. Operations that can
/// produce the empty set return std::optional instead.
class Segment {
 public:
  /// Throws NonIntegralOrNegativeLength unless e - b is in Z>=0.
  Segment(Line line, HalfExp b, HalfExp e);

  const Line& line() const { return line_; }
  HalfExp begin() const { return b_; }
  HalfExp end() const { return e_; }

  /// Number of cuspidal points, e - b + 1.
  std::int64_t card() const { return (e_ - b_).twice() / 2 + 1; }

  bool contains(HalfExp x) const {
    return b_ <= x && x <= e_ && (x - b_).is_integer();
  }
  bool contains(const Segment& other) const {
    return line_ == other.line_ && contains(other.b_) && contains(other.e_);
  }

  std::string to_string() const;  // "[-1/2,1/2]"

  friend bool operator==(const Segment&, const Segment&) = default;
  // Canonical order inside a multisegment: by beginning, then end.
  friend std::strong_ordering operator<=>(const Segment& a, const Segment& b) {
    if (auto c = a.b_ <=> b.b_; c != 0) return c;
    if (auto c = a.e_ <=> b.e_; c != 0) return c;
    return a.line_ <=> b.line_;
  }

 private:
  Line line_;
  HalfExp b_;
  HalfExp e_;
};

Segment make_segment(Line line, HalfExp b, HalfExp e);

inline std::int64_t card(const Segment& s) { return s.card(); }

bool linked(const Segment& s1, const Segment& s2);

/// s1 -> s2: linked, and s1 carries the beginning of the union.
bool precedes(const Segment& s1, const Segment& s2);

/// Throws UnionNotASegment when the union has a gap.
Segment seg_union(const Segment& s1, const Segment& s2);
std::optional<Segment> seg_intersection(const Segment& s1, const Segment& s2);

/// Segment minus its end / its beginning; empty for singletons.
std::optional<Segment> minus_end(const Segment& s);
std::optional<Segment> minus_begin(const Segment& s);

Segment twist_segment(const Segment& s, HalfExp z);
Segment hermitian_dual(const Segment& s);

}  // namespace zel

#endif  // ZEL_SEGMENT_HPP
