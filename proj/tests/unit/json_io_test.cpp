#include <gtest/gtest.h>

#include "support/expect.hpp"
#include "support/gen.hpp"
#include "zel/json_io.hpp"

namespace zel {
namespace {

using testing::error_code;
using testing::M;
using testing::S;
using testing::X;

TEST(Json, SegmentSchema) {
  EXPECT_EQ(to_json(S("[-1/2,3/2]")), json::parse(R"({"line":"rho","b":"-1/2","e":"3/2"})"));
  EXPECT_EQ(parse_segment(json::parse(R"({"b":-1,"e":"2"})")), S("[-1,2]"));
}

TEST(Json, MultisegmentSchema) {
  const json j = to_json(M("([0,1],[-1,0])"));
  EXPECT_EQ(j, json::parse(R"({"line":"rho","segments":[{"b":"-1","e":"0"},{"b":"0","e":"1"}]})"));
  EXPECT_EQ(to_json(M("()"))["segments"], json::array());
  // any order on input
  EXPECT_EQ(parse_multisegment(json::parse(R"({"segments":[{"b":"0","e":"1"},{"b":"-1","e":"0"}]})")),
            M("([-1,0],[0,1])"));
  EXPECT_EQ(parse_multisegment(json::parse(R"({"line":"sigma","segments":[]})")).line(), Line("sigma"));
}

TEST(Json, RingElementSchema) {
  RingElement e(Basis::Zeta);
  e.add_term(M("([0,0])"), -2);
  const json j = to_json(e);
  EXPECT_EQ(j["basis"], "zeta");
  EXPECT_EQ(j["terms"][0]["coef"], -2);
  EXPECT_EQ(parse_ring_element(j), e);
}

TEST(Json, ReportSchema) {
  const auto r = compose_zelevinsky(1, 1, 1);
  const json j = to_json(r);
  EXPECT_EQ(j["n"], 1);
  EXPECT_EQ(j["sign"], "+");
  EXPECT_EQ(j["basis"], "Z");
  EXPECT_EQ(j["length"], 2);
  EXPECT_EQ(j["factors"][0]["j"], 1);
  EXPECT_EQ(j["lattice"], json::parse("[[1],[0,1]]"));
  EXPECT_EQ(parse_report(j), r);
}

TEST(Json, OracleAndTrace) {
  const json o = to_json(oracle_composition(2, 2, 2));
  EXPECT_EQ(o["factors"].size(), 3u);
  EXPECT_EQ(o["certificates"].size(), 3u);
  DualTrace t;
  mw_dual(M("([0,1],[1,2])"), &t);
  const json tj = to_json(t);
  EXPECT_EQ(tj["steps"].size(), t.steps.size());
  EXPECT_TRUE(tj["steps"][0].contains("remaining"));
}

TEST(Json, MalformedInput) {
  EXPECT_EQ(error_code([] { parse_multisegment(json::parse(R"({"segs":[]})")); }), Errc::ParseError);
  EXPECT_EQ(error_code([] { parse_multisegment(json::parse(R"({"segments":[{"b":"x","e":"1"}]})")); }),
            Errc::ParseError);
  EXPECT_EQ(error_code([] { parse_segment(json::parse(R"({"b":"0","e":"1/2"})")); }),
            Errc::NonIntegralOrNegativeLength);
  EXPECT_EQ(error_code([] { parse_ring_element(json::parse(R"({"basis":"L","terms":[]})")); }), Errc::ParseError);
  EXPECT_EQ(error_code([] { parse_half_exp(json(1.5)); }), Errc::ParseError);
}

TEST(JsonProperty, RoundTrips) {
  testing::Rng rng(55);
  for (int i = 0; i < 500; ++i) {
    const auto a = testing::random_multisegment(rng);
    EXPECT_EQ(parse_multisegment(json::parse(to_json(a).dump())), a);
    const auto z = testing::random_ring_element(rng, Basis::Z);
    EXPECT_EQ(parse_ring_element(json::parse(to_json(z).dump())), z);
    const auto e = testing::random_ring_element(rng, Basis::Zeta);
    EXPECT_EQ(parse_ring_element(to_json(e)), e);
  }
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d)
      for (int k = 0; k <= n + d + 1; ++k)
        for (Sign s : {Sign::Plus, Sign::Minus}) {
          const auto z = compose_zelevinsky(n, d, k, s);
          EXPECT_EQ(parse_report(json::parse(to_json(z).dump())), z);
          const auto l = compose_langlands(n, d, k, s);
          EXPECT_EQ(parse_report(to_json(l)), l);
        }
}

}  // namespace
}  // namespace zel
