#include "zel/segment.hpp"

#include <algorithm>

#include "zel/error.hpp"

namespace zel {

Segment::Segment(Line line, HalfExp b, HalfExp e) : line_(line), b_(b), e_(e) {
  const HalfExp length = e - b;
  if (!length.is_integer() || length < HalfExp{}) {
    throw Error(Errc::NonIntegralOrNegativeLength,
                "segment [" + b.to_string() + "," + e.to_string() + "] needs e - b in Z>=0");
  }
}

std::string Segment::to_string() const {
  return "[" + b_.to_string() + "," + e_.to_string() + "]";
}

Segment make_segment(Line line, HalfExp b, HalfExp e) { return Segment(line, b, e); }

namespace {

void require_same_line(const Segment& s1, const Segment& s2) {
  if (s1.line() != s2.line()) {
    throw Error(Errc::LineMismatch,
                "segments on lines '" + s1.line().name() + "' and '" + s2.line().name() + "'");
  }
}

// Same line assumed. True when s1 ∪ s2 is a segment: same residue class
// mod Z and no gap between them.
bool union_is_segment(const Segment& s1, const Segment& s2) {
  if (!(s1.begin() - s2.begin()).is_integer()) return false;
  const HalfExp lo_end = std::min(s1.end(), s2.end());
  const HalfExp hi_begin = std::max(s1.begin(), s2.begin());
  return hi_begin <= lo_end + 1;
}

}  // namespace

bool linked(const Segment& s1, const Segment& s2) {
  require_same_line(s1, s2);
  return union_is_segment(s1, s2) && !s1.contains(s2) && !s2.contains(s1);
}

bool precedes(const Segment& s1, const Segment& s2) {
  return linked(s1, s2) && s1.begin() < s2.begin();
}

Segment seg_union(const Segment& s1, const Segment& s2) {
  require_same_line(s1, s2);
  if (!union_is_segment(s1, s2)) {
    throw Error(Errc::UnionNotASegment, s1.to_string() + " ∪ " + s2.to_string());
  }
  return Segment(s1.line(), std::min(s1.begin(), s2.begin()), std::max(s1.end(), s2.end()));
}

std::optional<Segment> seg_intersection(const Segment& s1, const Segment& s2) {
  require_same_line(s1, s2);
  if (!(s1.begin() - s2.begin()).is_integer()) return std::nullopt;
  const HalfExp b = std::max(s1.begin(), s2.begin());
  const HalfExp e = std::min(s1.end(), s2.end());
  if (e < b) return std::nullopt;
  return Segment(s1.line(), b, e);
}

std::optional<Segment> minus_end(const Segment& s) {
  if (s.card() == 1) return std::nullopt;
  return Segment(s.line(), s.begin(), s.end() - 1);
}

std::optional<Segment> minus_begin(const Segment& s) {
  if (s.card() == 1) return std::nullopt;
  return Segment(s.line(), s.begin() + 1, s.end());
}

Segment twist_segment(const Segment& s, HalfExp z) {
  return Segment(s.line(), s.begin() + z, s.end() + z);
}

Segment hermitian_dual(const Segment& s) { return Segment(s.line(), -s.end(), -s.begin()); }

}  // namespace zel
