#include "hsr/stability.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hsr/error.hpp"

namespace hsr {

RationalPolynomial shift_polynomial(const RationalPolynomial& poly, const mpq_class& c) {
  std::vector<mpq_class> a = poly.coefficients();
  if (a.size() < 2 || sgn(c) == 0) return poly;
  // Repeated synthetic division by (z - c); pass k fixes coefficient k.
  const std::size_t degree = a.size() - 1;
  for (std::size_t k = 0; k < degree; ++k) {
    for (std::size_t j = degree - 1; j + 1 > k; --j) {
      a[j] += c * a[j + 1];
      if (j == 0) break;
    }
  }
  return RationalPolynomial(std::move(a));
}

RationalPolynomial reflect_polynomial(const RationalPolynomial& poly) {
  std::vector<mpq_class> a = poly.coefficients();
  for (std::size_t k = 1; k < a.size(); k += 2) a[k] = -a[k];
  return RationalPolynomial(std::move(a));
}

std::string to_string(StabilityVerdict::Status status) {
  switch (status) {
    case StabilityVerdict::Status::Stable:
      return "Stable";
    case StabilityVerdict::Status::Unstable:
      return "Unstable";
    case StabilityVerdict::Status::Boundary:
      return "Boundary";
  }
  return "?";
}

namespace {

void divide_by_content(std::vector<mpz_class>& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

StabilityVerdict routh_hurwitz(const RationalPolynomial& poly) {
  if (poly.is_zero()) throw ZeroPolynomial("Routh-Hurwitz test of the zero polynomial");
  if (poly.degree() < 1) throw DomainViolation("Routh-Hurwitz test needs degree >= 1");

  // Highest degree first, leading entry positive.
  std::vector<mpz_class> a = poly.primitive_integer_coefficients();
  std::reverse(a.begin(), a.end());
  const int degree = static_cast<int>(a.size()) - 1;

  // A polynomial whose roots all have Re <= 0 is a product of factors z + a
  // and z^2 + 2bz + b^2 + c^2 with a, b >= 0, so none of its coefficients is
  // negative.  A negative one therefore proves a root with Re > 0.
  for (int k = 0; k <= degree; ++k) {
    if (sgn(a[k]) < 0) {
      StabilityVerdict v;
      v.status = StabilityVerdict::Status::Unstable;
      v.witness_index = degree - k;
      v.witness = "negative coefficient of z^" + std::to_string(degree - k);
      return v;
    }
  }

  std::vector<mpz_class> r0;
  std::vector<mpz_class> r1;
  for (int k = 0; k <= degree; ++k) (k % 2 == 0 ? r0 : r1).push_back(a[k]);

  std::vector<int> first_signs{sgn(r0[0])};
  for (int row = 1; row <= degree; ++row) {
    if (r1.empty() || sgn(r1[0]) == 0) {
      StabilityVerdict v;
      v.status = StabilityVerdict::Status::Boundary;
      v.witness_index = row;
      v.witness = "zero leading entry in Routh row " + std::to_string(row);
      return v;
    }
    first_signs.push_back(sgn(r1[0]));
    if (row == degree) break;
    // next[k] = sign(p) (p r0[k+1] - r0[0] r1[k+1]) with p = r1[0].
    const mpz_class& pivot = r1[0];
    const bool negative = sgn(pivot) < 0;
    std::vector<mpz_class> next(r0.size() - 1);
    for (std::size_t k = 0; k + 1 < r0.size(); ++k) {
      next[k] = pivot * r0[k + 1];
      if (k + 1 < r1.size()) next[k] -= r0[0] * r1[k + 1];
      if (negative) next[k] = -next[k];
    }
    divide_by_content(next);
    r0 = std::move(r1);
    r1 = std::move(next);
  }

  int changes = 0;
  for (std::size_t i = 1; i < first_signs.size(); ++i) changes += first_signs[i] != first_signs[i - 1];
  StabilityVerdict v;
  if (changes == 0) {
    v.status = StabilityVerdict::Status::Stable;
  } else {
    v.status = StabilityVerdict::Status::Unstable;
    v.witness_index = changes;
    v.witness = std::to_string(changes) + " sign change(s) in the first column";
  }
  return v;
}

StabilityVerdict verify_half_plane(const RationalPolynomial& poly, const mpq_class& c, HalfPlaneSide side) {
  const RationalPolynomial shifted = shift_polynomial(poly, c);
  return routh_hurwitz(side == HalfPlaneSide::left_of ? shifted : reflect_polynomial(shifted));
}

StabilityVerdict verify_half_plane(const HypersimplexParams& params, const mpq_class& c, HalfPlaneSide side) {
  return verify_half_plane(ehrhart_polynomial(params), c, side);
}

StripVerdict verify_strip(const HypersimplexParams& params, const RationalPolynomial& poly) {
  params.require_conjecture_domain();
  StripVerdict v;
  v.right_ok = routh_hurwitz(poly);
  mpq_class left(-params.n(), params.d());
  left.canonicalize();
  v.left_ok = verify_half_plane(poly, left, HalfPlaneSide::right_of);
  v.overall = v.left_ok.stable() && v.right_ok.stable();
  return v;
}

StripVerdict verify_strip(const HypersimplexParams& params) {
  params.require_conjecture_domain();
  return verify_strip(params, ehrhart_polynomial(params));
}

}  // namespace hsr
