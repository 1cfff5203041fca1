#ifndef ZEL_DIAGRAM_HPP
#define ZEL_DIAGRAM_HPP

#include <string>

#include "zel/multisegment.hpp"
#include "zel/speh_params.hpp"

namespace zel {

/// ASCII grid of a multisegment: a header line of exponents, then one row
/// per segment (canonical order) with '*' in the columns it covers.
///
/// Columns step by 1, or by 1/2 when the support mixes integral and
/// half-integral exponents. Every column is as wide as the longest header
/// label; trailing blanks are trimmed. The empty multisegment renders as "".
std::string render_diagram(const Multisegment& a);

/// The lower ladder drawn with '*', the upper with 'o'. upper[i] shares
/// the row of lower[i + k - d] when k >= d and the two fit side by side;
/// otherwise the upper rows follow the lower ones.
std::string render_diagram(const SpehPairParams& p);

}  // namespace zel

#endif  // ZEL_DIAGRAM_HPP
