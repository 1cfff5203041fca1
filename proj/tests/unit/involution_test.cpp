#include <gtest/gtest.h>

#include "support/gen.hpp"
#include "support/oracles.hpp"
#include "zel/involution.hpp"

namespace zel {
namespace {

using testing::M;
using testing::X;

TEST(Involution, SmallCases) {
  EXPECT_EQ(mw_dual(speh(1, 2, X("0"))), M("([1/2,1/2],[-1/2,-1/2])"));
  EXPECT_EQ(mw_dual(M("([0,1],[0,1])")), M("([1,1],[1,1],[0,0],[0,0])"));
  EXPECT_EQ(mw_dual(M("()")), M("()"));
  EXPECT_EQ(mw_dual(M("([0,0],[1,1])")), M("([0,1])"));
  EXPECT_EQ(mw_dual_left(speh(1, 2, X("0"))), M("([1/2,1/2],[-1/2,-1/2])"));
  EXPECT_EQ(mw_dual_left(M("()")), M("()"));
}

TEST(Involution, SpehTranspose) {
  for (int n = 1; n <= 8; ++n) {
    for (int d = 1; d <= 8; ++d) {
      for (int c2 : {-3, 0, 1, 4}) {
        EXPECT_EQ(mw_dual(speh(n, d, half(c2))), speh(d, n, half(c2))) << n << "," << d;
      }
    }
  }
}

TEST(Involution, SegmentBecomesColumn) {
  for (int len = 1; len <= 7; ++len) {
    const Segment s(Line{}, X("-2"), X("-2") + (len - 1));
    std::vector<Segment> column;
    for (HalfExp x = s.begin(); x <= s.end(); x = x + 1) column.emplace_back(Line{}, x, x);
    EXPECT_EQ(mw_dual(Multisegment(Line{}, {s})), Multisegment(Line{}, column));
  }
}

TEST(Involution, TraceRecordsEachStep) {
  const Multisegment a = M("([0,1],[1,2],[2,2])");
  DualTrace trace;
  const Multisegment t = mw_dual(a, &trace);
  ASSERT_FALSE(trace.steps.empty());
  std::vector<Segment> emitted;
  for (const auto& step : trace.steps) {
    emitted.push_back(step.emitted);
    EXPECT_EQ(static_cast<std::int64_t>(step.chain.size()), step.emitted.card());
    EXPECT_EQ(step.chain.front().end(), step.emitted.end());
  }
  EXPECT_EQ(Multisegment(Line{}, emitted), t);
  EXPECT_TRUE(trace.steps.back().remaining.empty());
  // x = 2: [2,2] is the shortest ending there, then [0,1]; emit [1,2].
  EXPECT_EQ(trace.steps.front().remaining, M("([0,0],[1,2])"));
  EXPECT_EQ(t, M("([0,1],[1,2],[2,2])"));
}

TEST(Involution, LeftTraceMirrorsRight) {
  const Multisegment a = M("([-1,1],[0,0],[1,2])");
  DualTrace trace;
  const Multisegment t = mw_dual_left(a, &trace);
  EXPECT_EQ(t, mw_dual(a));
  ASSERT_FALSE(trace.steps.empty());
  EXPECT_TRUE(trace.steps.back().remaining.empty());
}

TEST(InvolutionProperty, InvolutiveOnRandomCorpus) {
  testing::Rng rng(2024);
  for (int i = 0; i < 1500; ++i) {
    const Multisegment a = testing::random_multisegment(rng);
    const Multisegment t = mw_dual(a);
    EXPECT_EQ(mw_dual(t), a) << a.to_string();
    EXPECT_EQ(supp(t), supp(a)) << a.to_string();
  }
}

TEST(InvolutionProperty, MatchesReferenceTranscription) {
  testing::Rng rng(2025);
  for (int i = 0; i < 1500; ++i) {
    const Multisegment a = testing::random_multisegment(rng);
    EXPECT_EQ(mw_dual(a), testing::reference_mw_dual(a)) << a.to_string();
  }
}

TEST(InvolutionProperty, LeftAndRightVersionsAgree) {
  testing::Rng rng(2026);
  for (int i = 0; i < 1500; ++i) {
    const Multisegment a = testing::random_multisegment(rng);
    EXPECT_EQ(mw_dual_left(a), mw_dual(a)) << a.to_string();
  }
}

TEST(InvolutionProperty, CommutesWithTwistAndHermitianDual) {
  testing::Rng rng(2027);
  for (int i = 0; i < 500; ++i) {
    const Multisegment a = testing::random_multisegment(rng);
    const HalfExp z = half(testing::uniform(rng, -6, 6));
    EXPECT_EQ(mw_dual(twist_ms(a, z)), twist_ms(mw_dual(a), z));
    EXPECT_EQ(mw_dual(hermitian_dual(a)), hermitian_dual(mw_dual(a)));
  }
}

}  // namespace
}  // namespace zel
