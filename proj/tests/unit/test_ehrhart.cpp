#include <gtest/gtest.h>

#include "hsr/ehrhart.hpp"
#include "hsr/error.hpp"
#include "hsr/lattice_oracle.hpp"

using namespace hsr;

namespace {

// Expansion of (1/20)(m+1)(11(m+1)^4 + 5(m+1)^2 + 4).
RationalPolynomial delta36_factored() {
  const RationalPolynomial u{1, 1};
  const RationalPolynomial u2 = u * u;
  const RationalPolynomial inner = mpq_class(11) * (u2 * u2) + mpq_class(5) * u2 + RationalPolynomial{4};
  return mpq_class(1, 20) * (u * inner);
}

// Independent Eulerian numbers from the explicit alternating sum
// A(k, j) = sum_i (-1)^i C(k+1, i) (j + 1 - i)^k.
mpz_class eulerian_explicit(int k, int j) {
  mpz_class total = 0;
  for (int i = 0; i <= j + 1; ++i) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(j + 1 - i), static_cast<unsigned long>(k));
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(k + 1), static_cast<unsigned long>(i));
    total += (i % 2 == 0 ? 1 : -1) * c * p;
  }
  return total;
}

}  // namespace

TEST(Params, Validation) {
  EXPECT_THROW(HypersimplexParams(0, 3), InvalidParams);
  EXPECT_THROW(HypersimplexParams(3, 3), InvalidParams);
  EXPECT_THROW(HypersimplexParams(5, 4), InvalidParams);
  EXPECT_NO_THROW(HypersimplexParams(3, 5));
  EXPECT_THROW(HypersimplexParams(3, 5).require_conjecture_domain(), ConjectureDomain);
  EXPECT_NO_THROW(HypersimplexParams(3, 6).require_conjecture_domain());
  EXPECT_EQ(HypersimplexParams(2, 7).complement(), HypersimplexParams(5, 7));
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(5, 3), 10);
  EXPECT_EQ(binomial(4, 0), 1);
  EXPECT_EQ(binomial(-1, 2), 1);
  EXPECT_EQ(binomial(-3, 3), -10);
  EXPECT_EQ(binomial(2, 5), 0);
}

TEST(TermPolynomial, Examples) {
  const auto t = term_polynomial({1, 3}, {0});
  EXPECT_EQ(t, RationalPolynomial(std::vector<mpq_class>{1, mpq_class(3, 2), mpq_class(1, 2)}));
  EXPECT_EQ(term_polynomial({3, 6}, {1}).evaluate(0), 0);
  const auto t241 = term_polynomial({2, 4}, {1});
  EXPECT_EQ(t241, RationalPolynomial(std::vector<mpq_class>{0, mpq_class(4, 3), 2, mpq_class(2, 3)}));
  for (long m = 1; m <= 3; ++m) EXPECT_EQ(t241.evaluate(m), 4 * binomial(m + 2, 3));
  EXPECT_THROW((void)term_polynomial({3, 6}, {3}), InvalidTermIndex);
  EXPECT_THROW((void)term_polynomial({3, 6}, {-1}), InvalidTermIndex);
}

TEST(TermPolynomial, ValueAtZero) {
  for (int n = 2; n <= 9; ++n) {
    for (int d = 1; d < n; ++d) {
      for (int s = 0; s < d; ++s) EXPECT_EQ(term_polynomial({d, n}, {s}).evaluate(0), s == 0 ? 1 : 0);
    }
  }
}

TEST(EhrhartPolynomial, Delta36MatchesFactoredForm) {
  const auto p = ehrhart_polynomial({3, 6});
  EXPECT_EQ(p, delta36_factored());
  EXPECT_EQ(p.to_string(), "1, 37/10, 25/4, 23/4, 11/4, 11/20");
}

TEST(EhrhartPolynomial, SimplexAndD2Closed) {
  EXPECT_EQ(ehrhart_polynomial({1, 4}),
            RationalPolynomial(std::vector<mpq_class>{1, mpq_class(11, 6), 1, mpq_class(1, 6)}));
  // C(2m+3, 3) - 4 C(m+2, 3) at m = 0..4, against the oracle.
  const auto p = ehrhart_polynomial({2, 4});
  for (long m = 0; m <= 4; ++m) {
    const mpz_class closed = binomial(2 * m + 3, 3) - 4 * binomial(m + 2, 3);
    EXPECT_EQ(p.evaluate(m), closed);
    EXPECT_EQ(closed, count_points({2, 4, m, false}));
  }
}

TEST(EhrhartPolynomial, StructuralInvariants) {
  for (int n = 2; n <= 30; ++n) {
    for (int d = 1; d < n; ++d) {
      const auto p = ehrhart_polynomial({d, n});
      ASSERT_EQ(p.degree(), n - 1) << d << "," << n;
      EXPECT_EQ(p.coefficient(0), 1);
      EXPECT_GT(p.leading_coefficient(), 0);
      EXPECT_EQ(evaluate_exact(p, 1), binomial(n, static_cast<unsigned long>(d)));
    }
  }
}

TEST(EhrhartPolynomial, ComplementHasSamePolynomial) {
  for (int n = 2; n <= 16; ++n) {
    for (int d = 1; d < n; ++d) EXPECT_EQ(ehrhart_polynomial({d, n}), ehrhart_polynomial({n - d, n}));
  }
}

TEST(EvaluateExact, Examples) {
  const auto p = ehrhart_polynomial({2, 4});
  EXPECT_EQ(evaluate_exact(p, 1), 6);
  EXPECT_EQ(evaluate_exact(p, 2), 19);
  EXPECT_EQ(evaluate_exact(p, 0), 1);
}

TEST(NormalizedVolume, Examples) {
  EXPECT_EQ(normalized_volume({3, 6}), mpq_class(11, 20));
  EXPECT_EQ(normalized_volume({1, 5}), mpq_class(1, 24));
  EXPECT_EQ(normalized_volume({2, 4}), mpq_class(2, 3));
}

TEST(NormalizedVolume, EqualsEulerianOverFactorial) {
  for (int n = 2; n <= 25; ++n) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n - 1));
    for (int d = 1; d < n; ++d) {
      const mpz_class a = eulerian_explicit(n - 1, d - 1);
      EXPECT_EQ(eulerian_number(n - 1, d - 1), a);
      mpq_class expected(a, fact);
      expected.canonicalize();
      EXPECT_EQ(normalized_volume({d, n}), expected) << d << "," << n;
    }
  }
}

TEST(Reciprocity, NegativeArgumentCountsInterior) {
  for (int n = 2; n <= 7; ++n) {
    for (int d = 1; d < n; ++d) {
      const auto p = ehrhart_polynomial({d, n});
      for (long m = 1; m <= 4; ++m) {
        const mpq_class sign = (n - 1) % 2 == 0 ? 1 : -1;
        EXPECT_EQ(sign * evaluate_exact(p, -m), count_points({d, n, m, true})) << d << "," << n << "," << m;
      }
    }
  }
}
