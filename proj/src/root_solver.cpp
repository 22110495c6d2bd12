#include "hsr/root_solver.hpp"

#include <boost/multiprecision/float128.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hsr/error.hpp"

namespace hsr {

namespace {

using Quad = boost::multiprecision::float128;

ScaledReal to_scaled(const mpz_class& v) {
  if (sgn(v) == 0) return {};
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return ScaledReal(mant, exp);
}

ScaledReal to_scaled(const mpq_class& v) { return to_scaled(v.get_num()) / to_scaled(v.get_den()); }

// 2^x for arbitrary real x.
ScaledReal pow2(double x) {
  const double whole = std::floor(x);
  return ScaledReal(std::exp2(x - whole), static_cast<std::int64_t>(whole));
}

template <class Real>
BasicScaledComplex<Real> widen(const ScaledReal& r) {
  return BasicScaledComplex<Real>(Real(r.mantissa()), Real(0), r.exponent());
}

template <class Real>
ScaledComplex narrow(const BasicScaledComplex<Real>& v) {
  return ScaledComplex(static_cast<double>(v.real_mantissa()), static_cast<double>(v.imag_mantissa()), v.exponent());
}

// One term C(n,s) prod_j ((d-s) z + j - s) and its z-derivative, built factor
// by factor with the product rule.  Both share a binary exponent that is
// folded in only when the mantissas drift far from 1.
template <class Real>
class TermProduct {
 public:
  explicit TermProduct(const ScaledReal& start) : pr_(start.mantissa()), exponent_(start.exponent()) {}

  void multiply(const Real& slope, const Real& fr, const Real& fi) {
    // D <- D f + P slope, then P <- P f.
    const Real dr = dr_ * fr - di_ * fi + pr_ * slope;
    const Real di = dr_ * fi + di_ * fr + pi_ * slope;
    const Real pr = pr_ * fr - pi_ * fi;
    const Real pi = pr_ * fi + pi_ * fr;
    pr_ = pr;
    pi_ = pi;
    dr_ = dr;
    di_ = di;
    using std::abs;
    const Real size = std::max({abs(pr_), abs(pi_), abs(dr_), abs(di_)});
    if (size > kHigh || (size < kLow && size != 0)) {
      using std::frexp;
      using std::ldexp;
      int e = 0;
      (void)frexp(size, &e);
      pr_ = ldexp(pr_, -e);
      pi_ = ldexp(pi_, -e);
      dr_ = ldexp(dr_, -e);
      di_ = ldexp(di_, -e);
      exponent_ += e;
    }
  }

  [[nodiscard]] BasicScaledComplex<Real> value() const { return {pr_, pi_, exponent_}; }
  [[nodiscard]] BasicScaledComplex<Real> derivative() const { return {dr_, di_, exponent_}; }

 private:
  static constexpr double kHigh = 0x1p+400;
  static constexpr double kLow = 0x1p-400;
  Real pr_;
  Real pi_ = 0;
  Real dr_ = 0;
  Real di_ = 0;
  std::int64_t exponent_;
};

}  // namespace

SolverConfig default_solver_config(const HypersimplexParams& params) {
  SolverConfig config;
  config.tolerance = params.n() <= 60 ? 1e-10 : 1e-8;
  return config;
}

EhrhartEvaluator::EhrhartEvaluator(const HypersimplexParams& params)
    : params_(params), terms_(std::min(params.d(), params.n() - params.d())) {
  const int n = params.n();
  for (int s = 0; s < terms_; ++s) binomials_.push_back(to_scaled(binomial(n, static_cast<unsigned long>(s))));
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n - 1));
  inverse_factorial_ = ScaledReal(1.0) / to_scaled(fact);

  const RationalPolynomial poly = ehrhart_polynomial(HypersimplexParams(terms_, n));
  mpz_class denominator(1);
  for (const auto& c : poly.coefficients()) {
    coefficient_moduli_.push_back(to_scaled(mpq_class(abs(c))));
    mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), c.get_den_mpz_t());
  }
  for (const auto& c : poly.coefficients()) integer_coefficients_.push_back(c.get_num() * (denominator / c.get_den()));
  coefficient_denominator_ = to_scaled(denominator);

  // sum_{k<N} |c_k/c_N| x^(k-N) is strictly decreasing in x; bisect on log2 x
  // for the point where it equals 1.
  const int degree = poly.degree();
  const ScaledReal lead = coefficient_moduli_.back();
  auto excess = [&](double log2x) {
    ScaledReal total;
    for (int k = 0; k < degree; ++k) {
      if (coefficient_moduli_[k].is_zero()) continue;
      total = total + (coefficient_moduli_[k] / lead) * pow2(log2x * (k - degree));
    }
    return total.log2();
  };
  double lo = -64.0;
  double hi = 1.0;
  while (excess(hi) > 0.0) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }
  cauchy_radius_ = std::exp2(hi);
}

template <class Real>
EhrhartEvaluator::Evaluation EhrhartEvaluator::evaluate_with(std::complex<double> z) const {
  const int n = params_.n();
  const Real zr(z.real());
  const Real zi(z.imag());
  BasicScaledComplex<Real> value;
  BasicScaledComplex<Real> derivative;
  ScaledReal magnitude;
  for (int s = 0; s < terms_; ++s) {
    const Real slope(terms_ - s);
    TermProduct<Real> term(binomials_[s]);
    for (int j = 1; j <= n - 1; ++j) term.multiply(slope, slope * zr + Real(j - s), slope * zi);
    const auto term_value = term.value();
    magnitude = magnitude + term_value.abs();
    if (s % 2 == 0) {
      value = value + term_value;
      derivative = derivative + term.derivative();
    } else {
      value = value - term_value;
      derivative = derivative - term.derivative();
    }
  }
  const auto scale = widen<Real>(inverse_factorial_);
  return {narrow(value * scale), narrow(derivative * scale), magnitude * inverse_factorial_};
}

namespace {

// Integer m and exponent e with m * 2^e == x exactly.
std::pair<mpz_class, long> dyadic(double x) {
  if (x == 0.0) return {mpz_class(0), 0L};
  int e = 0;
  const double f = std::frexp(x, &e);
  return {mpz_class(std::ldexp(f, 53)), static_cast<long>(e) - 53};
}

ScaledComplex to_scaled(const mpz_class& re, const mpz_class& im, long shift) {
  const ScaledReal r = to_scaled(mpz_class(abs(re)));
  const ScaledReal i = to_scaled(mpz_class(abs(im)));
  const std::int64_t base = std::max(r.is_zero() ? INT64_MIN : r.exponent(), i.is_zero() ? INT64_MIN : i.exponent());
  if (base == INT64_MIN) return {};
  auto part = [base](const ScaledReal& v, int sign) {
    return v.is_zero() ? 0.0 : sign * std::ldexp(v.mantissa(), static_cast<int>(v.exponent() - base));
  };
  return ScaledComplex(part(r, sgn(re)), part(i, sgn(im)), base + shift);
}

}  // namespace

EhrhartEvaluator::Evaluation EhrhartEvaluator::evaluate_exact_dyadic(std::complex<double> z) const {
  // z = (a + b i) / 2^k with integers a, b.  With w = a + b i and h = 2^k,
  //   D 2^(kN) p(z)      = sum_j C_j w^j h^(N-j)
  //   D 2^(k(N-1)) p'(z) = sum_j j C_j w^(j-1) h^(N-j)
  // and both sums are run by Horner in Gaussian integers.
  auto [a, ea] = dyadic(z.real());
  auto [b, eb] = dyadic(z.imag());
  long common = std::min(sgn(a) ? ea : eb, sgn(b) ? eb : ea);
  if (sgn(a)) a <<= static_cast<unsigned long>(ea - common);
  if (sgn(b)) b <<= static_cast<unsigned long>(eb - common);
  if (common > 0) {
    a <<= static_cast<unsigned long>(common);
    b <<= static_cast<unsigned long>(common);
    common = 0;
  }
  const unsigned long k = static_cast<unsigned long>(-common);
  const int degree = static_cast<int>(integer_coefficients_.size()) - 1;

  mpz_class vr = integer_coefficients_[degree];
  mpz_class vi = 0;
  mpz_class dr = degree * integer_coefficients_[degree];
  mpz_class di = 0;
  mpz_class tr;
  mpz_class ti;
  mpz_class shifted;
  for (int j = degree - 1; j >= 0; --j) {
    const unsigned long shift = k * static_cast<unsigned long>(degree - j);
    shifted = integer_coefficients_[j] << shift;
    tr = vr * a - vi * b;
    ti = vr * b + vi * a;
    vr = tr + shifted;
    vi = ti;
    if (j >= 1) {
      tr = dr * a - di * b;
      ti = dr * b + di * a;
      dr = tr + j * shifted;
      di = ti;
    }
  }
  const auto denominator = ScaledComplex(coefficient_denominator_.mantissa(), 0.0, coefficient_denominator_.exponent());
  Evaluation out;
  out.value = to_scaled(vr, vi, -static_cast<long>(k) * degree) / denominator;
  out.derivative = degree >= 1 ? to_scaled(dr, di, -static_cast<long>(k) * (degree - 1)) / denominator : ScaledComplex{};
  out.term_magnitude = out.value.abs();
  return out;
}

EhrhartEvaluator::Evaluation EhrhartEvaluator::evaluate(std::complex<double> z, Precision precision) const {
  switch (precision) {
    case Precision::Quad:
      return evaluate_with<Quad>(z);
    case Precision::Exact:
      return evaluate_exact_dyadic(z);
    case Precision::Double:
      break;
  }
  return evaluate_with<double>(z);
}

ScaledComplex EhrhartEvaluator::value(std::complex<double> z) const { return evaluate(z, Precision::Double).value; }

ScaledComplex EhrhartEvaluator::value_extended(std::complex<double> z) const {
  return evaluate(z, Precision::Quad).value;
}

std::complex<double> EhrhartEvaluator::log_derivative(std::complex<double> z) const {
  const auto e = evaluate(z, Precision::Double);
  if (e.value.is_zero()) throw EvaluationAtRoot("p(z) vanishes; p'/p is undefined at this point");
  return (e.derivative / e.value).to_complex();
}

double EhrhartEvaluator::residual(std::complex<double> z) const {
  const ScaledComplex v = value(z);
  if (v.is_zero()) return 0.0;
  const ScaledReal modulus(std::abs(z));
  ScaledReal bound;
  for (auto it = coefficient_moduli_.rbegin(); it != coefficient_moduli_.rend(); ++it) {
    bound = bound * modulus + *it;
  }
  return (v.abs() / bound).to_double();
}

ScaledComplex evaluate_scaled(const HypersimplexParams& params, std::complex<double> z) {
  return EhrhartEvaluator(params).value_extended(z);
}

std::complex<double> log_derivative(const HypersimplexParams& params, std::complex<double> z) {
  return EhrhartEvaluator(params).log_derivative(z);
}

double residual(const HypersimplexParams& params, std::complex<double> root) {
  return EhrhartEvaluator(params).residual(root);
}

namespace {

// Snap nearly-real roots onto the axis and make complex pairs exact
// conjugates, keeping each change only if the residual stays within tolerance.
void symmetrize(const EhrhartEvaluator& eval, double tolerance, std::vector<std::complex<double>>& roots) {
  const std::size_t count = roots.size();
  std::vector<bool> paired(count, false);
  for (std::size_t k = 0; k < count; ++k) {
    const auto z = roots[k];
    if (std::abs(z.imag()) <= 100.0 * tolerance * (1.0 + std::abs(z))) {
      const std::complex<double> snapped{z.real(), 0.0};
      if (eval.residual(snapped) <= tolerance) {
        roots[k] = snapped;
        paired[k] = true;
      }
    }
  }
  for (std::size_t k = 0; k < count; ++k) {
    if (paired[k] || roots[k].imag() <= 0.0) continue;
    std::size_t best = count;
    double best_distance = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
      if (paired[j] || j == k || roots[j].imag() >= 0.0) continue;
      const double distance = std::abs(roots[j] - std::conj(roots[k]));
      if (best == count || distance < best_distance) {
        best = j;
        best_distance = distance;
      }
    }
    if (best == count) continue;
    const std::complex<double> mean = 0.5 * (roots[k] + std::conj(roots[best]));
    if (eval.residual(mean) <= tolerance) {
      roots[k] = mean;
      roots[best] = std::conj(mean);
    }
    paired[k] = paired[best] = true;
  }
}

// Starting points on circles whose radii come from the upper convex hull of
// (k, log|c_k|): each hull edge from k_a to k_b contributes k_b - k_a points
// on the circle of radius (|c_{k_a}| / |c_{k_b}|)^(1 / (k_b - k_a)).  The
// angles carry an irrational, seed-derived rotation.
std::vector<std::complex<double>> initial_approximations(const EhrhartEvaluator& eval, std::uint64_t seed) {
  const auto& moduli = eval.coefficient_moduli();
  const int degree = eval.degree();
  std::vector<int> hull;
  for (int k = 0; k <= degree; ++k) {
    if (moduli[k].is_zero()) continue;
    const double y = moduli[k].log2();
    while (hull.size() >= 2) {
      const int a = hull[hull.size() - 2];
      const int b = hull.back();
      const double ya = moduli[a].log2();
      const double yb = moduli[b].log2();
      // Drop b if it lies on or below the chord from a to k.
      if ((yb - ya) * (k - a) <= (y - ya) * (b - a)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(k);
  }

  const double golden = std::numbers::phi - 1.0;
  const double rotation = std::fmod(static_cast<double>(seed % 1000003 + 1) * golden, 1.0);
  std::vector<std::complex<double>> z;
  z.reserve(static_cast<std::size_t>(degree));
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const int a = hull[e];
    const int b = hull[e + 1];
    const int count = b - a;
    const double radius = std::exp2((moduli[a].log2() - moduli[b].log2()) / count);
    for (int j = 0; j < count; ++j) {
      const double angle = 2.0 * std::numbers::pi * ((j + rotation) / count + static_cast<double>(e) / degree);
      z.push_back(std::polar(radius, angle));
    }
  }
  return z;
}

}  // namespace

RootSet find_roots(const HypersimplexParams& params, const SolverConfig& config) {
  if (config.tolerance <= 0.0 || config.max_iterations < 1) {
    throw DomainViolation("solver needs tolerance > 0 and max_iterations >= 1");
  }
  const EhrhartEvaluator eval(params);
  std::vector<std::complex<double>> z = initial_approximations(eval, config.seed);

  // Iterates stay in double.  Evaluation starts with the double product form
  // and switches to exact dyadic evaluation for good once some |p(z_k)| sinks
  // to the rounding level of its own alternating sum while z_k still moves
  // by more than the tolerance.
  auto precision = EhrhartEvaluator::Precision::Double;
  auto noise_floor = [&](const EhrhartEvaluator::Evaluation& e) {
    return e.term_magnitude * ScaledReal(16.0 * eval.degree() * 0x1p-53);
  };

  std::vector<bool> done(z.size(), false);
  RootSet out;
  int iteration = 0;
  std::size_t remaining = z.size();
  while (remaining > 0 && iteration < config.max_iterations) {
    ++iteration;
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (done[k]) continue;
      const auto e = eval.evaluate(z[k], precision);
      if (e.value.is_zero()) {
        done[k] = true;
        --remaining;
        continue;
      }
      if (e.derivative.is_zero()) continue;
      const std::complex<double> newton = (e.value / e.derivative).to_complex();
      std::complex<double> repulsion{0.0, 0.0};
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const std::complex<double> correction = newton / (1.0 - newton * repulsion);
      if (!std::isfinite(correction.real()) || !std::isfinite(correction.imag())) continue;
      z[k] -= correction;
      const bool small_step = std::abs(correction) < config.tolerance * (1.0 + std::abs(z[k]));
      if (small_step && eval.residual(z[k]) <= config.tolerance) {
        done[k] = true;
        --remaining;
      } else if (!small_step && precision == EhrhartEvaluator::Precision::Double &&
                 !(noise_floor(e) < e.value.abs())) {
        precision = EhrhartEvaluator::Precision::Exact;
      }
    }
  }

  out.iterations = iteration;
  out.converged = remaining == 0;
  if (out.converged) symmetrize(eval, config.tolerance, z);
  out.residuals.reserve(z.size());
  for (const auto& root : z) out.residuals.push_back(eval.residual(root));
  out.roots = std::move(z);
  return out;
}

}  // namespace hsr
