#ifndef ZEL_SPEH_PARAMS_HPP
#define ZEL_SPEH_PARAMS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "zel/multisegment.hpp"

namespace zel {

/// Corner exponents of one Speh ladder: its first segment is
/// [first_begin, first_end] and its last is [last_begin, last_end].
struct LadderCorners {
  HalfExp first_begin;  // A
  HalfExp first_end;    // B
  HalfExp last_begin;   // C
  HalfExp last_end;     // D

  friend bool operator==(const LadderCorners&, const LadderCorners&) = default;
};

/// The pair a(n,d) twisted by nu^(-k/2) ("lower") and by nu^(k/2)
/// ("upper"), centered on the line. lower[i] and upper[i] are the i-th
/// segments of each ladder, ordered so that lower[0] -> lower[1] -> ...
struct SpehPairParams {
  int n = 1;
  int d = 1;
  int k = 0;
  Line line;
  std::vector<Segment> lower;
  std::vector<Segment> upper;
  LadderCorners lower_corners;
  LadderCorners upper_corners;

  Multisegment lower_ms() const { return Multisegment(line, lower); }
  Multisegment upper_ms() const { return Multisegment(line, upper); }

  friend bool operator==(const SpehPairParams&, const SpehPairParams&) = default;
};

/// Throws OutOfRange unless n, d >= 1 and k >= 0.
SpehPairParams make_params(int n, int d, int k, Line line = Line{});

/// Number of exponents shared by the supports of the two ladders,
/// n + d - 1 - k. Throws OutOfRange unless 1 <= k <= n + d - 1.
int shared_exponent_count(const SpehPairParams& p);

/// Indices j >= 1 for which lower[n-1] -> upper[j-1]:
/// max(n-k+1, 1) <= j <= min(n-k+d, n). Empty for k = 0 and k >= n + d.
std::optional<std::pair<int, int>> valid_j_range(const SpehPairParams& p);

/// r_0 is lower + upper. For valid j >= 1 the block
/// lower[n-j..n-1], upper[0..j-1] is replaced by the pairwise unions and
/// (non-empty) intersections lower[n-j+i] ∪/∩ upper[i]. Throws InvalidIndex
/// for any other j.
Multisegment r_multisegment(const SpehPairParams& p, int j);

/// All defined indices in increasing order: 0 followed by valid_j_range.
std::vector<int> defined_indices(const SpehPairParams& p);

}  // namespace zel

#endif  // ZEL_SPEH_PARAMS_HPP
