#ifndef ZEL_INVOLUTION_HPP
#define ZEL_INVOLUTION_HPP

#include <vector>

#include "zel/multisegment.hpp"

namespace zel {

/// One pass of the Mœglin–Waldspurger loop: the emitted segment, the chain
/// of segments it was read off from, and the multisegment left afterwards.
struct DualStep {
  Segment emitted;
  std::vector<Segment> chain;
  Multisegment remaining;
};

struct DualTrace {
  std::vector<DualStep> steps;
};

/// The Zelevinsky involution a -> a^t, computed with the right-to-left
/// Mœglin–Waldspurger algorithm.
///
/// Each pass starts at the largest end x, takes a shortest segment ending
/// there, then keeps taking a shortest segment ending at x-1, x-2, ... that
/// is linked with the previously taken one. The chain of length k emits
/// [x-k+1, x], and every taken segment loses its end. Passes repeat until
/// nothing is left. If `trace` is non-null each pass is appended to it.
Multisegment mw_dual(const Multisegment& a, DualTrace* trace = nullptr);

/// Left-to-right variant: conjugate of mw_dual by exponent negation.
Multisegment mw_dual_left(const Multisegment& a, DualTrace* trace = nullptr);

}  // namespace zel

#endif  // ZEL_INVOLUTION_HPP
