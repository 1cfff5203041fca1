#include <gtest/gtest.h>

#include <sstream>

#include "support/gen.hpp"
#include "zel/error.hpp"
#include "zel/half_exp.hpp"

namespace zel {
namespace {

TEST(HalfExp, HalfOfInteger) {
  EXPECT_EQ(half(0), HalfExp{});
  EXPECT_EQ(half(-3).to_string(), "-3/2");
  EXPECT_EQ(half(2) + half(2), HalfExp::integer(2));
}

TEST(HalfExp, TextForm) {
  EXPECT_EQ(HalfExp::integer(2).to_string(), "2");
  EXPECT_EQ(HalfExp::integer(-7).to_string(), "-7");
  EXPECT_EQ(half(1).to_string(), "1/2");
  EXPECT_EQ(HalfExp{}.to_string(), "0");

  EXPECT_EQ(HalfExp::parse("3/2"), half(3));
  EXPECT_EQ(HalfExp::parse("-2"), HalfExp::integer(-2));
  EXPECT_EQ(HalfExp::parse("4/2"), HalfExp::integer(2));
  EXPECT_EQ(HalfExp::parse("+1/2"), half(1));

  std::ostringstream os;
  os << half(-5);
  EXPECT_EQ(os.str(), "-5/2");
}

TEST(HalfExp, ParseRejectsGarbage) {
  for (const char* bad : {"", "1/3", "abc", "1/", "/2", "1.5", "--1", "2/0"}) {
    try {
      HalfExp::parse(bad);
      ADD_FAILURE() << "accepted \"" << bad << "\"";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::ParseError) << bad;
    }
  }
}

TEST(HalfExp, ArithmeticAndOrder) {
  EXPECT_EQ((half(1) + 1).twice(), 3);
  EXPECT_EQ(half(1) - half(3), HalfExp::integer(-1));
  EXPECT_EQ(-half(3), half(-3));
  EXPECT_LT(half(-1), HalfExp{});
  EXPECT_LT(half(3), HalfExp::integer(2));
  EXPECT_TRUE(HalfExp::integer(4).is_integer());
  EXPECT_FALSE(half(5).is_integer());
}

TEST(HalfExpProperty, TextRoundTripAndOrder) {
  testing::Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const HalfExp a = half(testing::uniform(rng, -400, 400));
    const HalfExp b = half(testing::uniform(rng, -400, 400));
    EXPECT_EQ(HalfExp::parse(a.to_string()), a);
    EXPECT_EQ(a < b, a.twice() < b.twice());
    EXPECT_EQ((a + b) - b, a);
  }
}

TEST(CuspidalPoint, TwistAndDual) {
  const Line rho;
  EXPECT_EQ(twist_point({rho, HalfExp{}}, half(1)).exp, half(1));
  EXPECT_EQ(twist_point({rho, HalfExp::integer(-1)}, HalfExp{}).exp, HalfExp::integer(-1));
  EXPECT_EQ(twist_point({rho, half(1)}, half(-1)).exp, HalfExp{});

  EXPECT_EQ(hermitian_dual_point({rho, half(1)}).exp, half(-1));
  EXPECT_EQ(hermitian_dual_point({rho, HalfExp{}}).exp, HalfExp{});
  EXPECT_EQ(hermitian_dual_point({rho, HalfExp::integer(-2)}).exp, HalfExp::integer(2));
}

TEST(CuspidalPointProperty, DualInvolutionAndTwistComposition) {
  testing::Rng rng(11);
  const Line sigma("sigma");
  for (int i = 0; i < 1000; ++i) {
    const CuspidalPoint p{sigma, half(testing::uniform(rng, -50, 50))};
    const HalfExp z1 = half(testing::uniform(rng, -20, 20));
    const HalfExp z2 = half(testing::uniform(rng, -20, 20));
    EXPECT_EQ(hermitian_dual_point(hermitian_dual_point(p)), p);
    EXPECT_EQ(twist_point(twist_point(p, z2), z1), twist_point(p, z1 + z2));
    EXPECT_EQ(twist_point(p, z1).line, sigma);
  }
}

TEST(Line, InterningAndDefault) {
  EXPECT_EQ(Line{}.name(), "rho");
  EXPECT_EQ(Line("rho"), Line{});
  EXPECT_NE(Line("sigma"), Line{});
  EXPECT_LT(Line("alpha"), Line("beta"));
}

}  // namespace
}  // namespace zel
