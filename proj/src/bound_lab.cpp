#include "hsr/bound_lab.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hsr/ehrhart.hpp"
#include "hsr/error.hpp"

namespace hsr {

namespace {

// Evaluation point whose real part may be the exact rational num/den, so
// that factors (d - s) z + j - s vanish exactly where they should.
struct Point {
  double re = 0.0;
  double im = 0.0;
  long num = 0;
  long den = 0;  // 0: use re
};

Point point(std::complex<double> z) { return {z.real(), z.imag(), 0, 0}; }

Point on_line(int n, int d, double beta) {
  // -n/d - i beta
  return {-static_cast<double>(n) / d, -beta, -n, d};
}

void check_term(int n, int d, int s) {
  HypersimplexParams params(d, n);
  if (s < 0 || s >= d) {
    throw InvalidTermIndex("term index s=" + std::to_string(s) + " outside [0, " + std::to_string(d - 1) + "]");
  }
}

ScaledReal to_scaled(const mpz_class& v) {
  if (sgn(v) == 0) return {};
  long e = 0;
  const double m = mpz_get_d_2exp(&e, v.get_mpz_t());
  return ScaledReal(m, e);
}

ScaledReal term_modulus(int n, int d, int s, const Point& z) {
  const int a = d - s;
  ScaledReal product = to_scaled(binomial(n, static_cast<unsigned long>(s)));
  const double im = a * z.im;
  for (int j = 1; j <= n - 1; ++j) {
    const int c = j - s;
    const double re = z.den != 0 ? static_cast<double>(a * z.num + static_cast<long>(c) * z.den) / z.den
                                 : a * z.re + c;
    const double modulus = std::hypot(re, im);
    if (modulus == 0.0) return {};
    product = product * ScaledReal(modulus);
  }
  return product;
}

double ratio(const ScaledReal& num, const ScaledReal& den) {
  if (num.is_zero()) return 0.0;
  return (num / den).to_double();
}

double phi_at(int n, int d, int s, const Point& z) {
  const ScaledReal base = term_modulus(n, d, 0, z);
  if (base.is_zero()) throw DivisionByZeroTerm("phi evaluated at a zero of f_{n,0}");
  return ratio(term_modulus(n, d, s, z), base);
}

bool strictly_less(double a, double b) { return a < b * (1.0 - kStrictSlack); }

template <class PointFn>
LemmaCheck compare_instances(const std::vector<double>& betas, int n_small, int n_large, int d, int s,
                             PointFn&& at) {
  LemmaCheck out;
  out.passed = true;
  for (double beta : betas) {
    ++out.samples;
    const double small = phi_at(n_small, d, s, at(n_small, beta));
    const double large = phi_at(n_large, d, s, at(n_large, beta));
    if (small == 0.0 && large == 0.0) {
      ++out.degenerate;
      continue;
    }
    const double r = small == 0.0 ? INFINITY : large / small;
    if (r > out.worst_ratio || out.samples == 1) {
      out.worst_ratio = r;
      out.worst_beta = beta;
    }
    if (!strictly_less(large, small)) out.passed = false;
  }
  return out;
}

}  // namespace

ScaledReal f_term_modulus(int n, int d, int s, std::complex<double> z) {
  check_term(n, d, s);
  return term_modulus(n, d, s, point(z));
}

double phi(int n, int d, int s, std::complex<double> z) {
  check_term(n, d, s);
  return phi_at(n, d, s, point(z));
}

std::vector<double> default_beta_grid(int n) {
  constexpr int kPoints = 400;
  std::vector<double> grid{0.0};
  const double lo = std::log(1e-3 * n);
  const double hi = std::log(1e2 * n);
  for (int k = 0; k < kPoints; ++k) {
    const double beta = std::exp(lo + (hi - lo) * k / (kPoints - 1));
    grid.push_back(beta);
    grid.push_back(-beta);
  }
  return grid;
}

LemmaCheck check_migi(int n, int d, int s, const std::vector<double>& betas) {
  check_term(n, d, s);
  return compare_instances(betas, n, n + 1, d, s, [](int, double beta) { return Point{0.0, beta, 0, 1}; });
}

LemmaCheck check_hidari(int n, int d, int s, const std::vector<double>& betas) {
  check_term(n, d, s);
  if (n < d * d - 2) {
    throw HypothesisViolation("hidari needs n >= d^2 - 2 = " + std::to_string(d * d - 2) + ", got n=" +
                              std::to_string(n));
  }
  return compare_instances(betas, n, n + d, d, s, [d](int m, double beta) { return on_line(m, d, beta); });
}

AidaCheck check_aida(int n, int d, int s, double alpha, double lambda) {
  check_term(n, d, s);
  if (s == 0) throw DomainViolation("aida bound needs 1 <= s <= d - 1");
  if (lambda == 0.0 || !std::isfinite(lambda)) throw DomainViolation("aida bound needs a finite nonzero lambda");
  const double alpha_max = static_cast<double>(n) / d;
  if (!(alpha >= 0.0 && alpha <= alpha_max)) {
    throw DomainViolation("alpha=" + std::to_string(alpha) + " outside [0, n/d]");
  }
  AidaCheck out;
  out.phi = phi_at(n, d, s, point({-alpha, lambda * n}));
  const double base = ((d - s) * (d - s) + 1.0 / (lambda * lambda)) / (static_cast<double>(d) * d);
  out.bound = binomial(n, static_cast<unsigned long>(s)).get_d() * std::pow(base, (n - 1) / 2.0);
  out.passed = strictly_less(out.phi, out.bound);
  return out;
}

std::vector<std::complex<double>> contour_points(const ContourSpec& spec, int* nudged) {
  HypersimplexParams params(spec.d, spec.n);
  if (spec.samples < 2) throw DomainViolation("a contour needs at least 2 samples");
  const double n = spec.n;
  const double d = spec.d;
  if (spec.kind == ContourSpec::Kind::horizontal_edge) {
    if (spec.range_lo < 0.0 || spec.range_hi > n / d || spec.range_lo > spec.range_hi) {
      throw DomainViolation("horizontal edge needs 0 <= alpha <= n/d");
    }
    if (spec.lambda == 0.0) throw DomainViolation("horizontal edge needs lambda != 0");
  }
  std::vector<std::complex<double>> points;
  points.reserve(static_cast<std::size_t>(spec.samples));
  int moved = 0;
  for (int k = 0; k < spec.samples; ++k) {
    const double t = spec.range_lo + (spec.range_hi - spec.range_lo) * k / (spec.samples - 1);
    std::complex<double> z;
    switch (spec.kind) {
      case ContourSpec::Kind::imaginary_axis:
        z = {0.0, t};
        break;
      case ContourSpec::Kind::left_edge:
        z = {-n / d, t};
        break;
      case ContourSpec::Kind::horizontal_edge:
        z = {-t, spec.lambda * n};
        break;
    }
    // Zeros of f_{n,0} sit at -j/d, 1 <= j <= n - 1.
    const double j = std::round(-z.real() * d);
    if (j >= 1 && j <= n - 1 && std::abs(z - std::complex<double>(-j / d, 0.0)) < 1e-9) {
      z += std::complex<double>(0.0, 1e-6);
      ++moved;
    }
    points.push_back(z);
  }
  if (nudged != nullptr) *nudged = moved;
  return points;
}

namespace {

double ratio_sum(const ContourSpec& spec, std::complex<double> z) {
  const Point p = spec.kind == ContourSpec::Kind::left_edge ? Point{z.real(), z.imag(), -spec.n, spec.d} : point(z);
  const ScaledReal base = term_modulus(spec.n, spec.d, 0, p);
  if (base.is_zero()) throw DivisionByZeroTerm("contour sample at a zero of f_{n,0}");
  double sum = 0.0;
  for (int s = 1; s < spec.d; ++s) sum += ratio(term_modulus(spec.n, spec.d, s, p), base);
  return sum;
}

MarginReport reduce(const std::vector<std::complex<double>>& points, const std::vector<double>& values,
                    int nudged) {
  MarginReport out;
  out.nudged = nudged;
  const auto best = std::max_element(values.begin(), values.end());
  out.max_ratio = *best;
  out.argmax_point = points[static_cast<std::size_t>(best - values.begin())];
  out.passed = out.max_ratio < 1.0;
  return out;
}

}  // namespace

MarginReport rouche_margin(const ContourSpec& spec) {
  int nudged = 0;
  const auto points = contour_points(spec, &nudged);
  std::vector<double> values(points.size());
  const long count = static_cast<long>(points.size());
#pragma omp parallel for schedule(static)
  for (long k = 0; k < count; ++k) values[k] = ratio_sum(spec, points[k]);
  return reduce(points, values, nudged);
}

MarginReport rouche_margin_serial(const ContourSpec& spec) {
  int nudged = 0;
  const auto points = contour_points(spec, &nudged);
  std::vector<double> values(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) values[k] = ratio_sum(spec, points[k]);
  return reduce(points, values, nudged);
}

D4SumCheck check_d4_sum_bound(int d) {
  if (d < 4) throw HypothesisViolation("sum bound needs d >= 4, got d=" + std::to_string(d));
  const mpq_class x(2, 3);
  D4SumCheck out;
  // term_s = x^s / s!
  mpq_class term = 1;
  mpq_class sum = 0;
  const int longer = d + 10;
  for (int s = 1; s <= longer; ++s) {
    term = term * x / s;
    sum += term;
    if (s == d - 1) out.partial_sum = sum;
  }
  out.exp_lower = sum;
  // Tail after s = longer is below term * r / (1 - r) with r = x / (longer + 1).
  const mpq_class r = x / (longer + 1);
  out.exp_upper = sum + term * r / (1 - r);
  out.ratio = mpq_class((2 * d - 1) * (d - 1) * (d - 1), d * (2 * d * d - 5 * d + 4));
  out.ratio.canonicalize();
  out.passed = out.partial_sum < out.exp_lower && out.exp_upper < 1 && out.ratio < 1;
  return out;
}

namespace {

mpz_class power(long base, unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
  return out;
}

mpz_class factorial(unsigned long k) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

}  // namespace

mpq_class exp_h(int d, int s) {
  if (s < 0 || s >= d) throw DomainViolation("h(d, s) needs 0 <= s < d");
  const auto e = static_cast<unsigned long>((d - s) * (d + 1));
  mpq_class out(mpz_class(d - 1) * power(static_cast<long>(d) * d + 2L * d, static_cast<unsigned long>(s)) *
                    power(d - s, e),
                factorial(static_cast<unsigned long>(s)) * power(d, e));
  out.canonicalize();
  return out;
}

double log_h(int d, double s) {
  return std::log(d - 1.0) + s * std::log(static_cast<double>(d) * d + 2.0 * d) - std::lgamma(s + 1.0) +
         (d - s) * (d + 1) * std::log((d - s) / d);
}

double log_g(double n, int d, double s) {
  return s * std::log(n) - std::lgamma(s + 1.0) + (d - s) * (n / d - 1.0) * std::log((d - s) / d);
}

namespace {

double log_of(const mpq_class& q) {
  long en = 0;
  long ed = 0;
  const double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log(mn / md) + static_cast<double>(en - ed) * std::log(2.0);
}

}  // namespace

HCheck check_h_negative(int d) {
  if (d < 4) throw HypothesisViolation("h(d, s) check needs d >= 4, got d=" + std::to_string(d));
  HCheck out;
  out.passed = true;
  for (int s = 1; s <= d - 2; ++s) {
    const mpq_class exact = exp_h(d, s);
    const double value = log_h(d, s);
    out.values.push_back(value);
    out.lgamma_error =
        std::max(out.lgamma_error, std::abs(std::lgamma(s + 1.0) - log_of(mpq_class(factorial(s)))));
    const bool negative = exact < 1;
    if (!negative || (value < 0.0) != negative) out.passed = false;
    // The double value must track the exact one.
    if (std::abs(value - log_of(exact)) > 1e-9 * std::max(1.0, std::abs(value))) out.passed = false;
  }
  out.endpoint_bound = mpq_class(power(2, 6) * power(6, static_cast<unsigned long>(d - 2)) * (d - 1),
                                 factorial(static_cast<unsigned long>(d + 1)) * power(d, 3));
  out.endpoint_bound.canonicalize();
  return out;
}

}  // namespace hsr
