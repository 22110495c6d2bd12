#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "hsr/ehrhart.hpp"
#include "hsr/error.hpp"
#include "hsr/stability.hpp"

using namespace hsr;
using Status = StabilityVerdict::Status;

namespace {

RationalPolynomial ints(std::vector<long> c) {
  std::vector<mpq_class> q(c.begin(), c.end());
  return RationalPolynomial(std::move(q));
}

// Roots from the companion matrix, independent of any Routh machinery.
Eigen::VectorXcd companion_roots(const std::vector<long>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -static_cast<double>(c[i]) / static_cast<double>(c[n]);
  return Eigen::EigenSolver<Eigen::MatrixXd>(m, false).eigenvalues();
}

}  // namespace

TEST(Shift, Examples) {
  EXPECT_EQ(shift_polynomial(ints({1, 1}), 1), ints({2, 1}));
  EXPECT_EQ(shift_polynomial(ints({0, 0, 1}), -1), ints({1, -2, 1}));
  const auto q = shift_polynomial(ehrhart_polynomial({3, 6}), -1);
  EXPECT_EQ(q.coefficient(0), 0);
  EXPECT_EQ(q.degree(), 5);
}

TEST(Reflect, Examples) {
  EXPECT_EQ(reflect_polynomial(ints({1, 1})), ints({1, -1}));
  EXPECT_EQ(reflect_polynomial(ints({1, 1, 1})), ints({1, -1, 1}));
  const auto p = ehrhart_polynomial({2, 4});
  EXPECT_EQ(reflect_polynomial(reflect_polynomial(p)), p);
}

TEST(ShiftReflect, HomomorphismAtRandomRationals) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 17);
  for (const auto& [d, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 6}, {4, 13}, {5, 21}}) {
    const auto p = ehrhart_polynomial({d, n});
    for (int trial = 0; trial < 10; ++trial) {
      mpq_class c(num(rng), den(rng));
      mpq_class t(num(rng), den(rng));
      c.canonicalize();
      t.canonicalize();
      // reflect(shift(p, c))(t) = p(-t + c)
      EXPECT_EQ(reflect_polynomial(shift_polynomial(p, c)).evaluate(t), p.evaluate(-t + c));
      EXPECT_EQ(shift_polynomial(p, c).evaluate(t), p.evaluate(t + c));
    }
  }
}

TEST(Routh, Examples) {
  EXPECT_EQ(routh_hurwitz(ints({2, 3, 1})).status, Status::Stable);
  EXPECT_EQ(routh_hurwitz(ints({-1, 0, 1})).status, Status::Unstable);
  const auto boundary = routh_hurwitz(ints({1, 0, 1}));
  EXPECT_EQ(boundary.status, Status::Boundary);
  EXPECT_TRUE(boundary.witness_index.has_value());
  EXPECT_THROW((void)routh_hurwitz(RationalPolynomial{}), ZeroPolynomial);
  EXPECT_THROW((void)routh_hurwitz(ints({3})), DomainViolation);
}

TEST(Routh, CountsRightHalfPlaneRoots) {
  // z^3 + z^2 + z + 6: positive coefficients, first column 1, 1, -5, 6.
  const auto v = routh_hurwitz(ints({6, 1, 1, 1}));
  EXPECT_EQ(v.status, Status::Unstable);
  EXPECT_EQ(v.witness_index, 2);
  // (z - 1)(z - 2)(z + 3)(z + 4) fails on a coefficient sign.
  const auto w = routh_hurwitz(ints({24, -22, -7, 4, 1}));
  EXPECT_EQ(w.status, Status::Unstable);
  EXPECT_EQ(w.witness_index, 2);  // -7 z^2
}

TEST(Routh, NegativeLeadingCoefficient) {
  EXPECT_EQ(routh_hurwitz(ints({-2, -3, -1})).status, Status::Stable);
}

TEST(Routh, RandomPolynomialsAgreeWithCompanionMatrix) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::uniform_int_distribution<int> degree(1, 8);
  int compared = 0;
  int stable = 0;
  while (compared < 100) {
    const int deg = degree(rng);
    std::vector<long> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = coeff(rng);
    if (c.back() == 0) continue;
    // Half the trials are products of left-half-plane quadratics/linears so
    // Stable is exercised too.
    if (compared % 2 == 0) {
      std::vector<long> p{1};
      for (int k = 0; k < deg; ++k) {
        const long a = 1 + static_cast<long>(rng() % 5);
        std::vector<long> next(p.size() + 1, 0);
        for (std::size_t i = 0; i < p.size(); ++i) {
          next[i] += a * p[i];
          next[i + 1] += p[i];
        }
        p = next;
      }
      c = p;
    }
    const auto v = routh_hurwitz(ints(c));
    if (v.status == Status::Boundary) continue;
    const auto roots = companion_roots(c);
    double max_re = -INFINITY;
    for (int i = 0; i < roots.size(); ++i) max_re = std::max(max_re, roots[i].real());
    if (std::abs(max_re) < 1e-6) continue;  // numerically on the axis
    EXPECT_EQ(v.status == Status::Stable, max_re < 0) << "degree " << deg;
    if (v.status == Status::Stable) {
      ++stable;
      const bool positive = c.back() > 0;
      for (long x : c) EXPECT_EQ(x > 0, positive);
    }
    ++compared;
  }
  EXPECT_GT(stable, 20);
}

TEST(VerifyStrip, Examples) {
  for (const auto& [d, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 6}, {1, 5}}) {
    const auto v = verify_strip({d, n});
    EXPECT_TRUE(v.overall) << d << "," << n;
    EXPECT_TRUE(v.left_ok.stable());
    EXPECT_TRUE(v.right_ok.stable());
  }
  EXPECT_THROW((void)verify_strip({3, 5}), ConjectureDomain);
}

TEST(VerifyStrip, FailsForTooNarrowStrip) {
  // Delta(1, 5) has roots -1..-4: -4 is on the line, and -11/4 splits them.
  EXPECT_EQ(verify_half_plane(ehrhart_polynomial({1, 5}), mpq_class(-4), HalfPlaneSide::right_of).status,
            Status::Boundary);
  EXPECT_EQ(verify_half_plane(ehrhart_polynomial({1, 5}), mpq_class(-11, 4), HalfPlaneSide::right_of).status,
            Status::Unstable);
}

TEST(VerifyHalfPlane, Examples) {
  EXPECT_EQ(verify_half_plane(HypersimplexParams(4, 45), 1, HalfPlaneSide::left_of).status, Status::Stable);
  EXPECT_EQ(verify_half_plane(HypersimplexParams(4, 24), -6, HalfPlaneSide::right_of).status, Status::Stable);
  EXPECT_EQ(verify_half_plane(HypersimplexParams(1, 3), 0, HalfPlaneSide::right_of).status, Status::Unstable);
}
