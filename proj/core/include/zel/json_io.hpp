#ifndef ZEL_JSON_IO_HPP
#define ZEL_JSON_IO_HPP

#include <vector>

#include <nlohmann/json.hpp>

#include "zel/composition.hpp"
#include "zel/involution.hpp"
#include "zel/oracle.hpp"
#include "zel/ring.hpp"
#include "zel/sweep.hpp"

namespace zel {

using json = nlohmann::json;

// Exponents are written as strings ("-3/2", "2"). On input a bare JSON
// integer is accepted as well. Every parse_* throws ParseError on malformed
// input and lets library errors (bad segment, line mismatch) through.

json to_json(HalfExp h);
json to_json(const Segment& s);
json to_json(const Multisegment& a);
json to_json(const RingElement& e);
json to_json(const SpehPairParams& p);
json to_json(const CompositionReport& r);
json to_json(const std::vector<LatticeLevel>& chain);
json to_json(const DualTrace& t);
json to_json(const OracleResult& r);
json to_json(const ConjectureResult& r);
json to_json(const SweepReport& r);

HalfExp parse_half_exp(const json& j);
Segment parse_segment(const json& j);
Multisegment parse_multisegment(const json& j);
RingElement parse_ring_element(const json& j);
SpehPairParams parse_params(const json& j);
CompositionReport parse_report(const json& j);

}  // namespace zel

#endif  // ZEL_JSON_IO_HPP
