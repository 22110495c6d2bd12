#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hsr {

/// Dense univariate polynomial over exact rationals.
///
/// Index k of coefficients() holds the coefficient of m^k.  Every stored
/// rational is canonical (lowest terms, positive denominator) and trailing
/// zero coefficients are trimmed, so the zero polynomial has no coefficients
/// and degree() == -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<mpq_class> coefficients);
  RationalPolynomial(std::initializer_list<long> integer_coefficients);

  static RationalPolynomial from_integers(const std::vector<mpz_class>& coefficients);

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  /// Coefficient of m^k; zero beyond the degree.
  [[nodiscard]] mpq_class coefficient(std::size_t k) const;
  [[nodiscard]] mpq_class leading_coefficient() const;

  /// Horner evaluation in exact arithmetic.
  [[nodiscard]] mpq_class evaluate(const mpq_class& x) const;
  [[nodiscard]] mpq_class evaluate(long m) const;

  /// Integer multiple with content removed and positive leading coefficient.
  /// Has the same roots as *this.
  [[nodiscard]] std::vector<mpz_class> primitive_integer_coefficients() const;

  /// Lowest degree first, comma separated, each as "num/den" (or "num").
  [[nodiscard]] std::string to_string() const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const mpq_class& c, const RationalPolynomial& p);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  std::vector<mpq_class> coeffs_;
};

}  // namespace hsr
