#include "hsr/ehrhart.hpp"

#include <string>
#include <vector>

#include "hsr/error.hpp"

namespace hsr {

HypersimplexParams::HypersimplexParams(int d, int n) : d_(d), n_(n) {
  if (d < 1 || d >= n) {
    throw InvalidParams("hypersimplex requires 1 <= d < n, got d=" + std::to_string(d) +
                        ", n=" + std::to_string(n));
  }
}

void HypersimplexParams::require_conjecture_domain() const {
  if (!in_conjecture_domain()) {
    throw ConjectureDomain("root strip operations require 2d <= n, got d=" + std::to_string(d_) +
                           ", n=" + std::to_string(n_));
  }
}

mpz_class binomial(long a, unsigned long k) {
  // mpz_bin_ui follows the falling-factorial convention for negative tops.
  mpz_class top(a);
  mpz_class out;
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), k);
  return out;
}

namespace {

// (n-1)! * term_polynomial, as integers: C(n,s) prod_{j=1}^{n-1} ((d-s) m + j - s).
std::vector<mpz_class> scaled_term(int d, int n, int s) {
  std::vector<mpz_class> poly{binomial(n, static_cast<unsigned long>(s))};
  const long slope = d - s;
  for (int j = 1; j <= n - 1; ++j) {
    const long offset = j - s;
    std::vector<mpz_class> next(poly.size() + 1);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k] += poly[k] * offset;
      next[k + 1] += poly[k] * slope;
    }
    poly = std::move(next);
  }
  return poly;
}

mpz_class factorial(unsigned long k) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

RationalPolynomial divide_by_factorial(std::vector<mpz_class> integer_coeffs, int n) {
  const mpz_class denom = factorial(static_cast<unsigned long>(n - 1));
  std::vector<mpq_class> q;
  q.reserve(integer_coeffs.size());
  for (auto& c : integer_coeffs) q.emplace_back(c, denom);
  return RationalPolynomial(std::move(q));
}

}  // namespace

RationalPolynomial term_polynomial(const HypersimplexParams& params, TermIndex s) {
  if (s.value < 0 || s.value > params.d() - 1) {
    throw InvalidTermIndex("term index s=" + std::to_string(s.value) + " outside [0, " +
                           std::to_string(params.d() - 1) + "]");
  }
  return divide_by_factorial(scaled_term(params.d(), params.n(), s.value), params.n());
}

RationalPolynomial ehrhart_polynomial(const HypersimplexParams& params) {
  const int d = params.d();
  const int n = params.n();
  std::vector<mpz_class> total(static_cast<std::size_t>(n));
  for (int s = 0; s < d; ++s) {
    const auto term = scaled_term(d, n, s);
    for (std::size_t k = 0; k < term.size(); ++k) {
      if (s % 2 == 0) {
        total[k] += term[k];
      } else {
        total[k] -= term[k];
      }
    }
  }
  return divide_by_factorial(std::move(total), n);
}

mpq_class evaluate_exact(const RationalPolynomial& poly, long m) { return poly.evaluate(m); }

mpq_class normalized_volume(const HypersimplexParams& params) {
  return ehrhart_polynomial(params).leading_coefficient();
}

mpz_class eulerian_number(int k, int j) {
  if (k < 0 || j < 0) return 0;
  if (k == 0) return j == 0 ? 1 : 0;
  // A(k, j) = (j + 1) A(k-1, j) + (k - j) A(k-1, j-1), row by row.
  std::vector<mpz_class> row{1};
  for (int size = 1; size <= k; ++size) {
    std::vector<mpz_class> next(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
      mpz_class v = 0;
      if (i < static_cast<int>(row.size())) v += (i + 1) * row[i];
      if (i >= 1 && i - 1 < static_cast<int>(row.size())) v += (size - i) * row[i - 1];
      next[i] = v;
    }
    row = std::move(next);
  }
  return j < static_cast<int>(row.size()) ? row[j] : mpz_class(0);
}

}  // namespace hsr
