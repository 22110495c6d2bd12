#include <gtest/gtest.h>

#include <array>
#include <vector>

#include "hsr/ehrhart.hpp"
#include "hsr/error.hpp"
#include "hsr/lattice_oracle.hpp"

using namespace hsr;

TEST(CountPoints, Examples) {
  EXPECT_EQ(count_points({2, 4, 1, false}), 6);
  EXPECT_EQ(count_points({2, 4, 2, false}), 19);
  EXPECT_EQ(count_points({1, 3, 2, false}), 6);
  EXPECT_EQ(count_points({2, 4, 0, false}), 1);
  EXPECT_EQ(count_points({2, 4, 1, true}), 0);
  EXPECT_THROW((void)count_points({2, 4, -1, false}), InvalidParams);
  EXPECT_THROW((void)count_points({4, 4, 1, false}), InvalidParams);
}

TEST(CountPoints, MatchesEhrhartPolynomial) {
  for (int n = 2; n <= 9; ++n) {
    for (int d = 1; d < n; ++d) {
      const auto p = ehrhart_polynomial({d, n});
      for (long m = 0; m <= 6; ++m) EXPECT_EQ(evaluate_exact(p, m), count_points({d, n, m, false}));
    }
  }
}

TEST(CountPoints, ComplementSymmetry) {
  for (int n = 2; n <= 9; ++n) {
    for (int d = 1; d < n; ++d) {
      for (long m = 0; m <= 6; ++m) {
        EXPECT_EQ(count_points({d, n, m, false}), count_points({n - d, n, m, false}));
        EXPECT_EQ(count_points({d, n, m, true}), count_points({n - d, n, m, true}));
      }
    }
  }
}

TEST(CountPoints, DynamicProgramMatchesNaive) {
  for (int n = 2; n <= 5; ++n) {
    for (int d = 1; d < n; ++d) {
      for (long m = 0; m <= 3; ++m) {
        for (bool strict : {false, true}) {
          const CountQuery q{d, n, m, strict};
          EXPECT_EQ(count_points(q), count_points_naive(q));
        }
      }
    }
  }
}

TEST(CountPoints, NaiveGuard) { EXPECT_THROW((void)count_points_naive({3, 12, 6, false}), DomainViolation); }

TEST(ForEachPoint, EveryPointIsInSublatticeAndInBox) {
  for (int n = 3; n <= 6; ++n) {
    for (int d = 1; d < n; ++d) {
      for (long m = 0; m <= 3; ++m) {
        long visited = 0;
        for_each_point({d, n, m, false}, [&](std::span<const long> x) {
          ++visited;
          long sum = 0;
          for (long v : x) {
            EXPECT_GE(v, 0);
            EXPECT_LE(v, m);
            sum += v;
          }
          EXPECT_EQ(sum, d * m);
          EXPECT_TRUE(in_sublattice(x, d));
        });
        EXPECT_EQ(visited, count_points({d, n, m, false}).get_si());
      }
    }
  }
}

TEST(InSublattice, Examples) {
  const std::array<long, 4> e1_minus_e2{1, -1, 0, 0};
  const std::array<long, 4> e1{1, 0, 0, 0};
  const std::array<long, 4> two_e1{2, 0, 0, 0};
  EXPECT_TRUE(in_sublattice(e1_minus_e2, 2));
  EXPECT_FALSE(in_sublattice(e1, 2));
  EXPECT_TRUE(in_sublattice(two_e1, 2));
  const std::array<long, 2> short_vec{1, 1};
  EXPECT_THROW((void)in_sublattice(short_vec, 2), DimensionMismatch);
}
