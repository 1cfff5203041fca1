#include "zel/multisegment.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "zel/error.hpp"

namespace zel {

Multisegment::Multisegment(Line line, std::vector<Segment> segments)
    : line_(line), segments_(std::move(segments)) {
  for (const auto& s : segments_) {
    if (s.line() != line_) {
      throw Error(Errc::LineMismatch, "segment " + s.to_string() + " is on line '" +
                                          s.line().name() + "', expected '" + line_.name() + "'");
    }
  }
  std::sort(segments_.begin(), segments_.end());
}

Multisegment::Multisegment(std::initializer_list<Segment> segments)
    : Multisegment(segments.size() == 0 ? Line{} : segments.begin()->line(),
                   std::vector<Segment>(segments)) {}

std::int64_t Multisegment::degree() const {
  std::int64_t total = 0;
  for (const auto& s : segments_) total += s.card();
  return total;
}

std::string Multisegment::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i) out += ",";
    out += segments_[i].to_string();
  }
  return out + ")";
}

std::strong_ordering operator<=>(const Multisegment& a, const Multisegment& b) {
  if (auto c = a.line_ <=> b.line_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.segments_.begin(), a.segments_.end(),
                                                b.segments_.begin(), b.segments_.end());
}

std::size_t MultisegmentHash::operator()(const Multisegment& a) const noexcept {
  std::size_t h = std::hash<std::string>{}(a.line().name());
  for (const auto& s : a.segments()) {
    const auto mix = static_cast<std::size_t>(s.begin().twice() * 1000003 + s.end().twice());
    h ^= mix + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<CuspidalPoint> CuspSupport::points() const {
  std::vector<CuspidalPoint> out;
  out.reserve(exps.size());
  for (auto x : exps) out.push_back({line, x});
  return out;
}

std::string CuspSupport::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) out += ",";
    out += exps[i].to_string();
  }
  return out + "}";
}

CuspSupport make_support(Line line, std::vector<HalfExp> exps) {
  std::sort(exps.begin(), exps.end());
  return {line, std::move(exps)};
}

Multisegment msum(const Multisegment& a1, const Multisegment& a2) {
  if (a1.empty()) return a2;
  if (a2.empty()) return a1;
  if (a1.line() != a2.line()) {
    throw Error(Errc::LineMismatch,
                "cannot add multisegments on '" + a1.line().name() + "' and '" + a2.line().name() + "'");
  }
  std::vector<Segment> all(a1.begin(), a1.end());
  all.insert(all.end(), a2.begin(), a2.end());
  return Multisegment(a1.line(), std::move(all));
}

Multisegment speh(int n, int d, HalfExp center, Line line) {
  if (n < 1 || d < 1) {
    throw Error(Errc::OutOfRange, "speh needs n, d >= 1");
  }
  std::vector<Segment> segs;
  segs.reserve(n);
  for (int i = 1; i <= n; ++i) {
    const HalfExp shift = half(-(n - 1)) + (i - 1) + center;
    segs.emplace_back(line, half(-(d - 1)) + shift, half(d - 1) + shift);
  }
  return Multisegment(line, std::move(segs));
}

namespace {

template <typename Fn>
Multisegment map_optional(const Multisegment& a, Fn fn) {
  std::vector<Segment> out;
  out.reserve(a.size());
  for (const auto& s : a) {
    if (auto t = fn(s)) out.push_back(*t);
  }
  return Multisegment(a.line(), std::move(out));
}

template <typename Fn>
Multisegment map_segments(const Multisegment& a, Fn fn) {
  std::vector<Segment> out;
  out.reserve(a.size());
  for (const auto& s : a) out.push_back(fn(s));
  return Multisegment(a.line(), std::move(out));
}

}  // namespace

Multisegment minus_ends(const Multisegment& a) { return map_optional(a, minus_end); }

Multisegment minus_begins(const Multisegment& a) { return map_optional(a, minus_begin); }

CuspSupport supp(const Multisegment& a) {
  std::vector<HalfExp> exps;
  exps.reserve(static_cast<std::size_t>(a.degree()));
  for (const auto& s : a) {
    for (HalfExp x = s.begin(); x <= s.end(); x += HalfExp::integer(1)) exps.push_back(x);
  }
  return make_support(a.line(), std::move(exps));
}

CuspSupport beginnings(const Multisegment& a) {
  std::vector<HalfExp> exps;
  for (const auto& s : a) exps.push_back(s.begin());
  return make_support(a.line(), std::move(exps));
}

CuspSupport ends(const Multisegment& a) {
  std::vector<HalfExp> exps;
  for (const auto& s : a) exps.push_back(s.end());
  return make_support(a.line(), std::move(exps));
}

std::vector<Multisegment> elementary_reductions(const Multisegment& a) {
  std::vector<Multisegment> out;
  const auto segs = a.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    // Equal neighbours give the same reductions as their first copy.
    if (i > 0 && segs[i] == segs[i - 1]) continue;
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (j > i + 1 && segs[j] == segs[j - 1]) continue;
      if (!linked(segs[i], segs[j])) continue;
      std::vector<Segment> next;
      next.reserve(segs.size());
      for (std::size_t m = 0; m < segs.size(); ++m) {
        if (m != i && m != j) next.push_back(segs[m]);
      }
      next.push_back(seg_union(segs[i], segs[j]));
      if (auto cap = seg_intersection(segs[i], segs[j])) next.push_back(*cap);
      out.emplace_back(a.line(), std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Breadth-first walk of {c : c <= a}. `visit` returns true to stop early.
template <typename Visit>
void walk_down(const Multisegment& a, const ClosureOptions& opts,
               std::unordered_set<Multisegment>& seen, Visit visit) {
  std::deque<Multisegment> queue;
  seen.insert(a);
  queue.push_back(a);
  while (!queue.empty()) {
    Multisegment current = std::move(queue.front());
    queue.pop_front();
    if (visit(current)) return;
    for (auto& next : elementary_reductions(current)) {
      if (seen.contains(next)) continue;
      if (seen.size() >= opts.max_nodes) {
        throw Error(Errc::ClosureTooLarge, "down closure of " + a.to_string() + " exceeds " +
                                               std::to_string(opts.max_nodes) + " nodes");
      }
      seen.insert(next);
      queue.push_back(std::move(next));
    }
  }
}

}  // namespace

std::vector<Multisegment> down_closure(const Multisegment& a, const ClosureOptions& opts) {
  std::unordered_set<Multisegment> seen;
  walk_down(a, opts, seen, [](const Multisegment&) { return false; });
  std::vector<Multisegment> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool leq(const Multisegment& b, const Multisegment& a, const ClosureOptions& opts) {
  if (b == a) return true;
  if (b.size() > a.size() || supp(b) != supp(a)) return false;
  bool found = false;
  std::unordered_set<Multisegment> seen;
  walk_down(a, opts, seen, [&](const Multisegment& c) {
    found = (c == b);
    return found;
  });
  return found;
}

Multisegment hermitian_dual(const Multisegment& a) {
  return map_segments(a, [](const Segment& s) { return hermitian_dual(s); });
}

Multisegment contragredient(const Multisegment& a) { return hermitian_dual(a); }

Multisegment twist_ms(const Multisegment& a, HalfExp z) {
  return map_segments(a, [z](const Segment& s) { return twist_segment(s, z); });
}

}  // namespace zel
