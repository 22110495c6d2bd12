#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <utility>

namespace hsr {

/// Nonnegative real stored as mantissa * 2^exponent with mantissa in [1, 2)
/// (or exactly zero).  Used for moduli of products that leave double range.
class ScaledReal {
 public:
  ScaledReal() = default;
  explicit ScaledReal(double value, std::int64_t exponent = 0) : mantissa_(std::abs(value)), exponent_(exponent) {
    normalize();
  }

  [[nodiscard]] double mantissa() const { return mantissa_; }
  [[nodiscard]] std::int64_t exponent() const { return exponent_; }
  [[nodiscard]] bool is_zero() const { return mantissa_ == 0.0; }

  /// log2 of the value; -infinity for zero.
  [[nodiscard]] double log2() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return std::log2(mantissa_) + static_cast<double>(exponent_);
  }

  /// Value as a double; saturates to 0 or infinity outside the double range.
  [[nodiscard]] double to_double() const {
    if (is_zero()) return 0.0;
    if (exponent_ > 1100) return std::numeric_limits<double>::infinity();
    if (exponent_ < -1100) return 0.0;
    return std::ldexp(mantissa_, static_cast<int>(exponent_));
  }

  friend ScaledReal operator*(const ScaledReal& a, const ScaledReal& b) {
    ScaledReal out;
    out.mantissa_ = a.mantissa_ * b.mantissa_;
    out.exponent_ = a.exponent_ + b.exponent_;
    out.normalize();
    return out;
  }

  /// a / b; b must be nonzero.
  friend ScaledReal operator/(const ScaledReal& a, const ScaledReal& b) {
    ScaledReal out;
    out.mantissa_ = a.mantissa_ / b.mantissa_;
    out.exponent_ = a.exponent_ - b.exponent_;
    out.normalize();
    return out;
  }

  friend ScaledReal operator+(const ScaledReal& a, const ScaledReal& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const auto& big = a.exponent_ >= b.exponent_ ? a : b;
    const auto& small = a.exponent_ >= b.exponent_ ? b : a;
    const std::int64_t shift = big.exponent_ - small.exponent_;
    ScaledReal out = big;
    if (shift < 64) out.mantissa_ += std::ldexp(small.mantissa_, -static_cast<int>(shift));
    out.normalize();
    return out;
  }

  friend bool operator<(const ScaledReal& a, const ScaledReal& b) {
    if (a.is_zero() || b.is_zero()) return a.mantissa_ < b.mantissa_;
    if (a.exponent_ != b.exponent_) return a.exponent_ < b.exponent_;
    return a.mantissa_ < b.mantissa_;
  }

 private:
  void normalize() {
    if (mantissa_ == 0.0 || !std::isfinite(mantissa_)) {
      if (mantissa_ == 0.0) exponent_ = 0;
      return;
    }
    int e = 0;
    mantissa_ = std::frexp(mantissa_, &e) * 2.0;
    exponent_ += e - 1;
  }

  double mantissa_ = 0.0;
  std::int64_t exponent_ = 0;
};

/// Complex value stored as mantissa * 2^exponent, |mantissa| in [1, 2) or the
/// value is exactly zero.
///
/// Real is double for the solver hot path and a wider float type where the
/// alternating Ehrhart sum cancels heavily.
template <class Real>
class BasicScaledComplex {
 public:
  BasicScaledComplex() = default;
  BasicScaledComplex(Real re, Real im, std::int64_t exponent = 0)
      : re_(std::move(re)), im_(std::move(im)), exponent_(exponent) {
    normalize();
  }
  explicit BasicScaledComplex(const std::complex<double>& z) : BasicScaledComplex(Real(z.real()), Real(z.imag())) {}

  [[nodiscard]] const Real& real_mantissa() const { return re_; }
  [[nodiscard]] const Real& imag_mantissa() const { return im_; }
  [[nodiscard]] std::int64_t exponent() const { return exponent_; }
  [[nodiscard]] bool is_zero() const { return re_ == 0 && im_ == 0; }

  [[nodiscard]] ScaledReal abs() const {
    using std::sqrt;
    const Real modulus = sqrt(re_ * re_ + im_ * im_);
    return ScaledReal(static_cast<double>(modulus), exponent_);
  }

  /// Value as complex<double>; components saturate outside the double range.
  [[nodiscard]] std::complex<double> to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    const double re = static_cast<double>(re_);
    const double im = static_cast<double>(im_);
    if (exponent_ > 1100) {
      const double inf = std::numeric_limits<double>::infinity();
      return {re == 0.0 ? 0.0 : std::copysign(inf, re), im == 0.0 ? 0.0 : std::copysign(inf, im)};
    }
    if (exponent_ < -1100) return {0.0, 0.0};
    const int e = static_cast<int>(exponent_);
    return {std::ldexp(re, e), std::ldexp(im, e)};
  }

  [[nodiscard]] BasicScaledComplex conj() const {
    BasicScaledComplex out = *this;
    out.im_ = -out.im_;
    return out;
  }

  BasicScaledComplex operator-() const {
    BasicScaledComplex out = *this;
    out.re_ = -out.re_;
    out.im_ = -out.im_;
    return out;
  }

  friend BasicScaledComplex operator*(const BasicScaledComplex& a, const BasicScaledComplex& b) {
    return BasicScaledComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_,
                              a.exponent_ + b.exponent_);
  }

  /// a / b; b must be nonzero.
  friend BasicScaledComplex operator/(const BasicScaledComplex& a, const BasicScaledComplex& b) {
    const Real denom = b.re_ * b.re_ + b.im_ * b.im_;
    return BasicScaledComplex((a.re_ * b.re_ + a.im_ * b.im_) / denom, (a.im_ * b.re_ - a.re_ * b.im_) / denom,
                              a.exponent_ - b.exponent_);
  }

  friend BasicScaledComplex operator+(const BasicScaledComplex& a, const BasicScaledComplex& b) {
    using std::ldexp;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const auto& big = a.exponent_ >= b.exponent_ ? a : b;
    const auto& small = a.exponent_ >= b.exponent_ ? b : a;
    const std::int64_t shift = big.exponent_ - small.exponent_;
    if (shift > kMaxAlignShift) return big;
    const int s = -static_cast<int>(shift);
    return BasicScaledComplex(big.re_ + ldexp(small.re_, s), big.im_ + ldexp(small.im_, s), big.exponent_);
  }

  friend BasicScaledComplex operator-(const BasicScaledComplex& a, const BasicScaledComplex& b) { return a + (-b); }

 private:
  // Beyond this many binary digits the smaller addend cannot affect the sum
  // for any mantissa type used here (quad precision has 113).
  static constexpr std::int64_t kMaxAlignShift = 256;

  void normalize() {
    using std::abs;
    using std::frexp;
    using std::ldexp;
    using std::sqrt;
    if (re_ == 0 && im_ == 0) {
      exponent_ = 0;
      return;
    }
    const Real larger = abs(re_) > abs(im_) ? abs(re_) : abs(im_);
    int e = 0;
    (void)frexp(larger, &e);
    // Rescale first so the modulus computation cannot overflow.
    re_ = ldexp(re_, -e);
    im_ = ldexp(im_, -e);
    exponent_ += e;
    const Real modulus = sqrt(re_ * re_ + im_ * im_);
    int f = 0;
    (void)frexp(modulus, &f);
    re_ = ldexp(re_, 1 - f);
    im_ = ldexp(im_, 1 - f);
    exponent_ += f - 1;
  }

  Real re_ = 0;
  Real im_ = 0;
  std::int64_t exponent_ = 0;
};

using ScaledComplex = BasicScaledComplex<double>;

}  // namespace hsr
