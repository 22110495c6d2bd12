#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hsr/ehrhart.hpp"
#include "hsr/scaled.hpp"

namespace hsr {

struct SolverConfig {
  int max_iterations = 200;
  /// Bound on the per-root relative backward error, and on the relative size
  /// of the last Aberth correction.
  double tolerance = 1e-10;
  /// Selects the rotation of the initial circle of approximations.
  std::uint64_t seed = 0;
};

/// Tolerance 1e-10 up to n = 60 and 1e-8 above; 200 iterations.
[[nodiscard]] SolverConfig default_solver_config(const HypersimplexParams& params);

/// Approximate roots of i(Delta(d, n), z), closed under conjugation.
struct RootSet {
  std::vector<std::complex<double>> roots;
  /// Relative backward error of each root, see residual().
  std::vector<double> residuals;
  int iterations = 0;
  bool converged = false;
};

/// Evaluates i(Delta(d, n), z) from the product form
///   (1 / (n-1)!) sum_s (-1)^s C(n, s) prod_{j=1}^{n-1} ((d-s) z + j - s)
/// without expanding monomial coefficients (except in the Exact tier, which
/// works on them as integers).  Values are carried with a
/// separate binary exponent so degree-150 products do not overflow.
///
/// Delta(d, n) and Delta(n - d, n) share their Ehrhart polynomial; the
/// evaluator always sums over the smaller of d and n - d.
class EhrhartEvaluator {
 public:
  explicit EhrhartEvaluator(const HypersimplexParams& params);

  [[nodiscard]] const HypersimplexParams& params() const { return params_; }
  [[nodiscard]] int degree() const { return params_.degree(); }

  /// Double and Quad run the product form with 53- and 113-bit mantissas.
  /// The alternating sum cancels by up to ~10^7 at integer points when
  /// 2d <= n, and by ~10^39 near the roots of Delta(75, 150).  Exact treats
  /// z as the dyadic rational it is and runs homogenized Horner over the
  /// integer coefficients, rounding only the final p and p'.
  enum class Precision { Double, Quad, Exact };

  /// p(z), p'(z) and the rounding scale sum_s |T_s(z)| / (n-1)! of the
  /// product form (for Exact, term_magnitude is |p(z)|).
  struct Evaluation {
    ScaledComplex value;
    ScaledComplex derivative;
    ScaledReal term_magnitude;
  };
  [[nodiscard]] Evaluation evaluate(std::complex<double> z, Precision precision) const;

  [[nodiscard]] ScaledComplex value(std::complex<double> z) const;
  [[nodiscard]] ScaledComplex value_extended(std::complex<double> z) const;

  /// p'(z) / p(z).  Throws EvaluationAtRoot when p(z) is exactly zero.
  [[nodiscard]] std::complex<double> log_derivative(std::complex<double> z) const;

  /// |p(z)| / sum_k |c_k| |z|^k with c_k the exact monomial coefficients.
  [[nodiscard]] double residual(std::complex<double> z) const;

  /// Unique positive root of |c_N| x^N = sum_{k<N} |c_k| x^k; every root of
  /// p lies in the closed disc of this radius.
  [[nodiscard]] double cauchy_radius() const { return cauchy_radius_; }

  [[nodiscard]] const std::vector<ScaledReal>& coefficient_moduli() const { return coefficient_moduli_; }

 private:
  template <class Real>
  Evaluation evaluate_with(std::complex<double> z) const;
  Evaluation evaluate_exact_dyadic(std::complex<double> z) const;

  HypersimplexParams params_;
  int terms_;  // min(d, n - d)
  std::vector<ScaledReal> binomials_;          // C(n, s), s < terms_
  ScaledReal inverse_factorial_;               // 1 / (n-1)!
  std::vector<ScaledReal> coefficient_moduli_;  // |c_k|
  std::vector<mpz_class> integer_coefficients_;  // c_k * coefficient_denominator_
  ScaledReal coefficient_denominator_;
  double cauchy_radius_ = 0.0;
};

[[nodiscard]] ScaledComplex evaluate_scaled(const HypersimplexParams& params, std::complex<double> z);

[[nodiscard]] std::complex<double> log_derivative(const HypersimplexParams& params, std::complex<double> z);

/// Aberth-Ehrlich simultaneous iteration for all n - 1 roots.  Deterministic
/// for a given config.  On failure to converge the best iterate is returned
/// with converged == false.
[[nodiscard]] RootSet find_roots(const HypersimplexParams& params, const SolverConfig& config);

[[nodiscard]] double residual(const HypersimplexParams& params, std::complex<double> root);

}  // namespace hsr
