#include "hsr/rational_polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace hsr {

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<long> integer_coefficients) {
  coeffs_.reserve(integer_coefficients.size());
  for (long c : integer_coefficients) coeffs_.emplace_back(c);
  normalize();
}

RationalPolynomial RationalPolynomial::from_integers(const std::vector<mpz_class>& coefficients) {
  std::vector<mpq_class> q;
  q.reserve(coefficients.size());
  for (const auto& c : coefficients) q.emplace_back(c);
  return RationalPolynomial(std::move(q));
}

void RationalPolynomial::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpq_class RationalPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : mpq_class(0);
}

mpq_class RationalPolynomial::leading_coefficient() const {
  return coeffs_.empty() ? mpq_class(0) : coeffs_.back();
}

mpq_class RationalPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

mpq_class RationalPolynomial::evaluate(long m) const { return evaluate(mpq_class(m)); }

std::vector<mpz_class> RationalPolynomial::primitive_integer_coefficients() const {
  mpz_class denominator_lcm(1);
  for (const auto& c : coeffs_) {
    mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<mpz_class> out;
  out.reserve(coeffs_.size());
  mpz_class content(0);
  for (const auto& c : coeffs_) {
    mpz_class v = c.get_num() * (denominator_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (out.empty()) return out;
  if (sgn(out.back()) < 0) content = -content;
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return out;
}

std::string RationalPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) os << ", ";
    os << coeffs_[k].get_str();
  }
  return os.str();
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<mpq_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) + b.coefficient(k);
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<mpq_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) - b.coefficient(k);
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const mpq_class& c, const RationalPolynomial& p) {
  std::vector<mpq_class> out(p.coeffs_);
  for (auto& x : out) x *= c;
  return RationalPolynomial(std::move(out));
}

}  // namespace hsr
