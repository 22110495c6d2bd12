#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "hsr/ehrhart.hpp"
#include "hsr/rational_polynomial.hpp"

namespace hsr {

/// q(z) = p(z + c), exact.
[[nodiscard]] RationalPolynomial shift_polynomial(const RationalPolynomial& poly, const mpq_class& c);

/// q(z) = p(-z).
[[nodiscard]] RationalPolynomial reflect_polynomial(const RationalPolynomial& poly);

struct StabilityVerdict {
  enum class Status { Stable, Unstable, Boundary };
  Status status = Status::Boundary;
  /// For Unstable, the power of z whose coefficient has the wrong sign, or
  /// (when every coefficient is positive) the number of first-column sign
  /// changes, which counts the roots with Re > 0.  For Boundary, the index
  /// of the row whose leading entry is 0.
  std::optional<int> witness_index;
  std::optional<std::string> witness;

  [[nodiscard]] bool stable() const { return status == Status::Stable; }
};

[[nodiscard]] std::string to_string(StabilityVerdict::Status status);

/// Coefficient signs first, then the Routh table over the integers.  Rows are built fraction-free and divided
/// by their gcd, which preserves signs.  An exact zero leading entry ends the
/// table with Boundary; nothing is perturbed.
///
/// Throws ZeroPolynomial for p == 0 and DomainViolation for constant p.
[[nodiscard]] StabilityVerdict routh_hurwitz(const RationalPolynomial& poly);

struct StripVerdict {
  StabilityVerdict left_ok;   // Re > -n/d
  StabilityVerdict right_ok;  // Re < 0
  bool overall = false;
};

/// Exact certificate that every root lies in -n/d < Re < 0.
/// Throws ConjectureDomain when 2d > n.
[[nodiscard]] StripVerdict verify_strip(const HypersimplexParams& params);
[[nodiscard]] StripVerdict verify_strip(const HypersimplexParams& params, const RationalPolynomial& poly);

enum class HalfPlaneSide { left_of, right_of };

/// Stable certifies Re < c for every root (left_of) or Re > c (right_of).
[[nodiscard]] StabilityVerdict verify_half_plane(const RationalPolynomial& poly, const mpq_class& c, HalfPlaneSide side);
[[nodiscard]] StabilityVerdict verify_half_plane(const HypersimplexParams& params, const mpq_class& c,
                                                 HalfPlaneSide side);

}  // namespace hsr
