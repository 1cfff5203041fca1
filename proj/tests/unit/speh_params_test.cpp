#include <gtest/gtest.h>

#include "support/expect.hpp"
#include "support/gen.hpp"
#include "zel/speh_params.hpp"

namespace zel {
namespace {

using testing::error_code;
using testing::M;
using testing::S;
using testing::X;

TEST(SpehParams, SmallFrames) {
  const auto p = make_params(1, 1, 1);
  EXPECT_EQ(p.lower, std::vector<Segment>{S("[-1/2,-1/2]")});
  EXPECT_EQ(p.upper, std::vector<Segment>{S("[1/2,1/2]")});

  const auto q = make_params(2, 1, 1);
  EXPECT_EQ(q.lower_ms(), M("([-1,-1],[0,0])"));
  EXPECT_EQ(q.upper_ms(), M("([0,0],[1,1])"));

  EXPECT_EQ(error_code([] { make_params(0, 1, 1); }), Errc::OutOfRange);
  EXPECT_EQ(error_code([] { make_params(1, 1, -1); }), Errc::OutOfRange);
}

TEST(SpehParams, FigureFrame) {
  // n = 3, d = 5: three rows of five, the upper ladder shifted right by k.
  const auto p = make_params(3, 5, 6);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(p.lower[i].card(), 5);
    EXPECT_EQ(p.upper[i].card(), 5);
    EXPECT_EQ(p.upper[i].begin() - p.lower[i].begin(), X("6"));
  }
  EXPECT_EQ(p.lower_corners.first_begin, X("-6"));
  EXPECT_EQ(p.upper_corners.last_end, X("6"));
}

TEST(SpehParams, CornerRelations) {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 1; d <= 6; ++d) {
      for (int k = 0; k <= n + d + 1; ++k) {
        const auto p = make_params(n, d, k);
        for (const auto* c : {&p.lower_corners, &p.upper_corners}) {
          EXPECT_EQ(c->first_end - c->first_begin, HalfExp::integer(d - 1));
          EXPECT_EQ(c->last_end - c->last_begin, HalfExp::integer(d - 1));
          EXPECT_EQ(c->last_begin - c->first_begin, HalfExp::integer(n - 1));
        }
        EXPECT_EQ(p.upper_corners.first_begin - p.lower_corners.first_begin, HalfExp::integer(k));
        EXPECT_EQ(p.lower_corners.first_begin, -half(d - 1) - half(n - 1) - half(k));
        EXPECT_EQ(p.lower_ms(), speh(n, d, half(-k)));
        EXPECT_EQ(p.upper_ms(), speh(n, d, half(k)));
        for (int i = 0; i < n; ++i) {
          EXPECT_EQ(p.lower[i], Segment(Line{}, p.lower_corners.first_begin + i, p.lower_corners.first_end + i));
        }
      }
    }
  }
}

TEST(SpehParams, SharedExponents) {
  EXPECT_EQ(shared_exponent_count(make_params(1, 1, 1)), 0);
  EXPECT_EQ(shared_exponent_count(make_params(2, 2, 3)), 0);
  EXPECT_EQ(shared_exponent_count(make_params(3, 5, 4)), 3);
  EXPECT_EQ(error_code([] { shared_exponent_count(make_params(2, 2, 0)); }), Errc::OutOfRange);
  EXPECT_EQ(error_code([] { shared_exponent_count(make_params(2, 2, 4)); }), Errc::OutOfRange);
}

TEST(SpehParams, SharedExponentsCountSupportOverlap) {
  for (int n = 1; n <= 5; ++n) {
    for (int d = 1; d <= 5; ++d) {
      for (int k = 1; k <= n + d - 1; ++k) {
        const auto p = make_params(n, d, k);
        int overlap = 0;
        for (HalfExp x = p.upper_corners.first_begin; x <= p.lower_corners.last_end; x = x + 1) ++overlap;
        EXPECT_EQ(shared_exponent_count(p), overlap);
      }
    }
  }
}

TEST(SpehParams, ValidRange) {
  EXPECT_EQ(valid_j_range(make_params(1, 1, 1)), (std::pair{1, 1}));
  EXPECT_EQ(valid_j_range(make_params(2, 1, 1)), (std::pair{2, 2}));
  EXPECT_EQ(valid_j_range(make_params(3, 2, 0)), std::nullopt);
  EXPECT_EQ(valid_j_range(make_params(3, 2, 5)), std::nullopt);
}

TEST(SpehParams, ValidRangeIsExactlyWherePrecedesHolds) {
  for (int n = 1; n <= 8; ++n) {
    for (int d = 1; d <= 8; ++d) {
      for (int k = 0; k <= n + d + 1; ++k) {
        const auto p = make_params(n, d, k);
        std::vector<int> by_relation;
        for (int j = 1; j <= n; ++j)
          if (precedes(p.lower[n - 1], p.upper[j - 1])) by_relation.push_back(j);
        std::vector<int> by_range;
        if (auto r = valid_j_range(p))
          for (int j = r->first; j <= r->second; ++j) by_range.push_back(j);
        EXPECT_EQ(by_range, by_relation) << n << "," << d << "," << k;
      }
    }
  }
}

TEST(SpehParams, RMultisegments) {
  const auto p = make_params(1, 1, 1);
  EXPECT_EQ(r_multisegment(p, 0), M("([-1/2,-1/2],[1/2,1/2])"));
  EXPECT_EQ(r_multisegment(p, 1), M("([-1/2,1/2])"));
  EXPECT_EQ(r_multisegment(make_params(2, 1, 1), 2), M("([-1,0],[0,1])"));
  EXPECT_EQ(r_multisegment(make_params(2, 1, 1), 2), speh(2, 2, X("0")));

  EXPECT_EQ(error_code([&] { r_multisegment(p, 2); }), Errc::InvalidIndex);
  EXPECT_EQ(error_code([] { r_multisegment(make_params(2, 1, 1), 1); }), Errc::InvalidIndex);
  EXPECT_EQ(error_code([] { r_multisegment(make_params(2, 2, 0), 1); }), Errc::InvalidIndex);
  EXPECT_EQ(error_code([] { r_multisegment(make_params(2, 2, 2), -1); }), Errc::InvalidIndex);
}

TEST(SpehParams, TopIndexSplitsIntoTwoSpehs) {
  // For k < d the top block is a(n,d+k) + a(n,d-k).
  for (int n = 1; n <= 6; ++n) {
    for (int d = 2; d <= 6; ++d) {
      for (int k = 1; k < d; ++k) {
        EXPECT_EQ(r_multisegment(make_params(n, d, k), n), speh(n, d + k, X("0")) + speh(n, d - k, X("0")))
            << n << "," << d << "," << k;
      }
    }
  }
}

TEST(SpehParams, DefinedIndices) {
  EXPECT_EQ(defined_indices(make_params(3, 2, 2)), (std::vector<int>{0, 2, 3}));
  EXPECT_EQ(defined_indices(make_params(3, 2, 0)), (std::vector<int>{0}));
}

TEST(SpehParamsProperty, SupportDistinctnessAndOrder) {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 1; d <= 6; ++d) {
      for (int k = 0; k <= n + d + 1; ++k) {
        const auto p = make_params(n, d, k);
        const auto top = r_multisegment(p, 0);
        std::vector<Multisegment> seen;
        for (int j : defined_indices(p)) {
          const auto r = r_multisegment(p, j);
          EXPECT_EQ(supp(r), supp(top));
          EXPECT_EQ(std::count(seen.begin(), seen.end(), r), 0);
          seen.push_back(r);
          if (n * d <= 9) {
            EXPECT_TRUE(leq(r, top)) << n << d << k << " j=" << j;
          }
        }
      }
    }
  }
}

TEST(SpehParamsProperty, HighestDerivativeDropsOneColumn) {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 2; d <= 6; ++d) {
      for (int k = 1; k <= n + d - 1; ++k) {
        const auto p = make_params(n, d, k);
        const auto q = make_params(n, d - 1, k);
        for (int j : defined_indices(p)) {
          if (j == 0) continue;
          if (!seg_intersection(p.lower[n - 1], p.upper[j - 1])) continue;
          EXPECT_EQ(minus_ends(r_multisegment(p, j)), twist_ms(r_multisegment(q, j), X("-1/2")))
              << n << "," << d << "," << k << " j=" << j;
        }
        EXPECT_EQ(minus_ends(r_multisegment(p, 0)), twist_ms(r_multisegment(q, 0), X("-1/2")));
      }
    }
  }
}

}  // namespace
}  // namespace zel
