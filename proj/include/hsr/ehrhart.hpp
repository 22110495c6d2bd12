#pragma once

#include <gmpxx.h>

#include "hsr/rational_polynomial.hpp"

namespace hsr {

/// The pair (d, n) naming the hypersimplex Delta(d, n): the convex hull of
/// the 0/1 vectors in R^n with exactly d ones.
///
/// Construction enforces 1 <= d < n.  Operations about the root strip
/// additionally call require_conjecture_domain(), which enforces 2d <= n.
class HypersimplexParams {
 public:
  /// Throws InvalidParams unless 1 <= d < n.
  HypersimplexParams(int d, int n);

  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int degree() const { return n_ - 1; }

  [[nodiscard]] bool in_conjecture_domain() const { return 2 * d_ <= n_; }
  /// Throws ConjectureDomain when 2d > n.
  void require_conjecture_domain() const;

  /// Delta(n - d, n), which is lattice-isomorphic to Delta(d, n).
  [[nodiscard]] HypersimplexParams complement() const { return {n_ - d_, n_}; }

  friend bool operator==(const HypersimplexParams&, const HypersimplexParams&) = default;

 private:
  int d_;
  int n_;
};

/// Summation index s of the alternating sum, 0 <= s <= d - 1.
struct TermIndex {
  int value;
};

/// Generalized binomial coefficient a(a-1)...(a-k+1)/k!, defined for every
/// integer a (negative a included).
[[nodiscard]] mpz_class binomial(long a, unsigned long k);

/// C(n, s) * C((d - s) m + n - 1 - s, n - 1) as a polynomial in m.
/// Throws InvalidTermIndex when s is outside [0, d - 1].
[[nodiscard]] RationalPolynomial term_polynomial(const HypersimplexParams& params, TermIndex s);

/// Ehrhart polynomial i(Delta(d, n), m) = sum_s (-1)^s term_polynomial(s).
[[nodiscard]] RationalPolynomial ehrhart_polynomial(const HypersimplexParams& params);

[[nodiscard]] mpq_class evaluate_exact(const RationalPolynomial& poly, long m);

/// Leading coefficient of the Ehrhart polynomial.
[[nodiscard]] mpq_class normalized_volume(const HypersimplexParams& params);

/// Eulerian number A(k, j): permutations of k elements with j descents.
[[nodiscard]] mpz_class eulerian_number(int k, int j);

}  // namespace hsr
