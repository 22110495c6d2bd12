#pragma once

#include <gmpxx.h>

#include <complex>
#include <vector>

#include "hsr/scaled.hpp"

namespace hsr {

// Every check here samples concrete points.  A pass is numerical evidence
// for an instance, never a proof.

/// Relative slack a sampled strict inequality a < b must show: a < b (1 - slack).
inline constexpr double kStrictSlack = 1e-12;

/// |f_{n,s}(z)| with f_{n,s}(z) = C(n, s) prod_{j=1}^{n-1} ((d - s) z + j - s).
/// Needs 0 <= s <= d - 1 < n.
[[nodiscard]] ScaledReal f_term_modulus(int n, int d, int s, std::complex<double> z);

/// phi_{n,d,s}(z) = |f_{n,s}(z)| / |f_{n,0}(z)|.  Throws DivisionByZeroTerm
/// when f_{n,0}(z) == 0, i.e. z = -j/d for some 1 <= j <= n - 1.
[[nodiscard]] double phi(int n, int d, int s, std::complex<double> z);

/// 0 and 400 log-spaced points on [1e-3 n, 1e2 n], with their negatives.
[[nodiscard]] std::vector<double> default_beta_grid(int n);

struct LemmaCheck {
  bool passed = false;
  int samples = 0;
  /// Samples where both sides are exactly 0: a common zero of the two
  /// f_{.,s}, where no strict inequality can hold.
  int degenerate = 0;
  /// Largest phi(larger instance) / phi(smaller instance) over the samples.
  double worst_ratio = 0.0;
  double worst_beta = 0.0;
};

/// phi_{n+1,d,s}(i beta) < phi_{n,d,s}(i beta) at each sample.
[[nodiscard]] LemmaCheck check_migi(int n, int d, int s, const std::vector<double>& betas);

/// phi_{n+d,d,s}(-(n+d)/d - i beta) < phi_{n,d,s}(-n/d - i beta) at each
/// sample; each instance is evaluated on its own line Re z = -n'/d.
/// Throws HypothesisViolation when n < d^2 - 2.
[[nodiscard]] LemmaCheck check_hidari(int n, int d, int s, const std::vector<double>& betas);

struct AidaCheck {
  bool passed = false;
  double phi = 0.0;
  /// C(n, s) (((d - s)^2 + 1/lambda^2) / d^2)^((n - 1) / 2)
  double bound = 0.0;
};

/// phi_{n,d,s}(-alpha + i lambda n) against its bound.  Throws DomainViolation
/// for s == 0, alpha outside [0, n/d] or lambda == 0.
[[nodiscard]] AidaCheck check_aida(int n, int d, int s, double alpha, double lambda);

struct ContourSpec {
  enum class Kind { imaginary_axis, left_edge, horizontal_edge };
  Kind kind = Kind::imaginary_axis;
  int d = 3;
  int n = 7;
  /// beta for the vertical edges (z = i beta, z = -n/d + i beta); alpha for
  /// the horizontal edge z = -alpha + i lambda n.
  double range_lo = 0.0;
  double range_hi = 1.0;
  double lambda = 1.4142135623730951;
  int samples = 2001;
};

/// Samples of the edge with its s = 0 poles avoided.
[[nodiscard]] std::vector<std::complex<double>> contour_points(const ContourSpec& spec, int* nudged = nullptr);

struct MarginReport {
  /// Max over samples of sum_{s=1}^{d-1} phi_{n,d,s}.
  double max_ratio = 0.0;
  std::complex<double> argmax_point;
  bool passed = false;
  /// Samples moved by 1e-6 because they sat within 1e-9 of a zero of f_{n,0}.
  int nudged = 0;
};

/// Samples are split across OpenMP threads; the report does not depend on
/// the thread count (ties go to the lowest sample index).
[[nodiscard]] MarginReport rouche_margin(const ContourSpec& spec);
/// Single-threaded reference for rouche_margin.
[[nodiscard]] MarginReport rouche_margin_serial(const ContourSpec& spec);

struct D4SumCheck {
  bool passed = false;
  /// sum_{s=1}^{d-1} 2^s / (3^s s!)
  mpq_class partial_sum;
  /// Rational bracket lower < e^{2/3} - 1 < upper from a longer partial sum
  /// and a geometric tail bound.
  mpq_class exp_lower;
  mpq_class exp_upper;
  /// (2d - 1)(d - 1)^2 / (d (2d^2 - 5d + 4))
  mpq_class ratio;
};

/// Compared in exact rationals.  Throws HypothesisViolation for d < 4.
[[nodiscard]] D4SumCheck check_d4_sum_bound(int d);

/// exp h(d, s) = (d - 1) (d^2 + 2d)^s / s! ((d - s) / d)^((d - s)(d + 1)),
/// exact for integer s.
[[nodiscard]] mpq_class exp_h(int d, int s);
/// h(d, s) through std::lgamma; s may be any real in [0, d).
[[nodiscard]] double log_h(int d, double s);
/// log g(n, d, s) = log(n^s / Gamma(s + 1) ((d - s)/d)^((d - s)(n/d - 1))).
[[nodiscard]] double log_g(double n, int d, double s);

struct HCheck {
  bool passed = false;
  /// h(d, s) for s = 1 .. d - 2.
  std::vector<double> values;
  /// 2^6 6^(d-2) (d-1) / ((d+1)! d^3), the bound on exp h(d, d - 2).
  mpq_class endpoint_bound;
  /// Largest |lgamma(s + 1) - log s!| seen.
  double lgamma_error = 0.0;
};

/// h(d, s) < 0 for every integer s in [1, d - 2] (the endpoints s = 1 and
/// s = d - 2 included), decided exactly; the lgamma values must agree in sign.
/// Throws HypothesisViolation for d < 4.
[[nodiscard]] HCheck check_h_negative(int d);

}  // namespace hsr
