#include "zel/speh_params.hpp"

#include <algorithm>
#include <string>

#include "zel/error.hpp"

namespace zel {

namespace {

LadderCorners corners(int n, int d, HalfExp center) {
  const HalfExp spread_d = half(d - 1);
  const HalfExp spread_n = half(n - 1);
  return {center - spread_d - spread_n, center + spread_d - spread_n,
          center - spread_d + spread_n, center + spread_d + spread_n};
}

std::vector<Segment> ladder(const Line& line, const LadderCorners& c, int n) {
  std::vector<Segment> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.emplace_back(line, c.first_begin + i, c.first_end + i);
  return out;
}

}  // namespace

SpehPairParams make_params(int n, int d, int k, Line line) {
  if (n < 1 || d < 1 || k < 0) {
    throw Error(Errc::OutOfRange, "need n, d >= 1 and k >= 0 (got n=" + std::to_string(n) +
                                      ", d=" + std::to_string(d) + ", k=" + std::to_string(k) + ")");
  }
  SpehPairParams p;
  p.n = n;
  p.d = d;
  p.k = k;
  p.line = line;
  p.lower_corners = corners(n, d, half(-k));
  p.upper_corners = corners(n, d, half(k));
  p.lower = ladder(line, p.lower_corners, n);
  p.upper = ladder(line, p.upper_corners, n);
  return p;
}

int shared_exponent_count(const SpehPairParams& p) {
  if (p.k < 1 || p.k > p.n + p.d - 1) {
    throw Error(Errc::OutOfRange, "shared exponents are counted for 1 <= k <= n+d-1");
  }
  return p.n + p.d - 1 - p.k;
}

std::optional<std::pair<int, int>> valid_j_range(const SpehPairParams& p) {
  if (p.k <= 0 || p.k >= p.n + p.d) return std::nullopt;
  const int lo = std::max(p.n - p.k + 1, 1);
  const int hi = std::min(p.n - p.k + p.d, p.n);
  if (lo > hi) return std::nullopt;
  return std::pair{lo, hi};
}

Multisegment r_multisegment(const SpehPairParams& p, int j) {
  if (j == 0) return p.lower_ms() + p.upper_ms();
  const auto range = valid_j_range(p);
  if (!range || j < range->first || j > range->second ||
      !precedes(p.lower[p.n - 1], p.upper[j - 1])) {
    throw Error(Errc::InvalidIndex, "r_" + std::to_string(j) + " is undefined for (n,d,k) = (" +
                                        std::to_string(p.n) + "," + std::to_string(p.d) + "," +
                                        std::to_string(p.k) + ")");
  }
  std::vector<Segment> segs;
  const int n = p.n;
  for (int i = 0; i < n - j; ++i) segs.push_back(p.lower[i]);
  for (int i = j; i < n; ++i) segs.push_back(p.upper[i]);
  for (int i = 0; i < j; ++i) {
    const Segment& lo = p.lower[n - j + i];
    const Segment& up = p.upper[i];
    segs.push_back(seg_union(lo, up));
    if (auto cap = seg_intersection(lo, up)) segs.push_back(*cap);
  }
  return Multisegment(p.line, std::move(segs));
}

std::vector<int> defined_indices(const SpehPairParams& p) {
  std::vector<int> out{0};
  if (auto range = valid_j_range(p)) {
    for (int j = range->first; j <= range->second; ++j) out.push_back(j);
  }
  return out;
}

}  // namespace zel
