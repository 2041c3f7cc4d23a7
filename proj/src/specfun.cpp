#include "rieszmix/specfun.hpp"

#include <cmath>
#include <limits>

namespace rieszmix {

namespace {

constexpr double kSeriesAsymptoticCrossover = 30.0;
const double kLog2Pi = std::log(2.0 * M_PI);

// Power series in log domain: log I = log t0 + log(sum of t_k/t0),
// t_k = (z/2)^{2k+alpha} / (k! Gamma(k+alpha+1)).
double log_bessel_i_series(double alpha, double z) {
  const double h = 0.5 * z;
  const double q = h * h;
  double log_t0 = alpha * std::log(h) - std::lgamma(alpha + 1.0);
  double sum = 1.0;
  double term = 1.0;
  for (int k = 0; k < 1000; ++k) {
    term *= q / ((k + 1.0) * (k + alpha + 1.0));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return log_t0 + std::log(sum);
}

// log I(alpha, z) ~ z - log(2 pi z)/2 + log(1 - (mu-1)/(8z) + ...),
// mu = 4 alpha^2, truncated at the smallest term.
double log_bessel_i_asymptotic(double alpha, double z) {
  const double mu = 4.0 * alpha * alpha;
  const double w = 8.0 * z;
  double sum = 1.0;
  double term = 1.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 60; ++k) {
    double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (k * w);
    if (std::abs(term) >= prev) break;  // divergence onset
    sum += term;
    prev = std::abs(term);
    if (prev < 1e-18 * std::abs(sum)) break;
  }
  return z - 0.5 * std::log(2.0 * M_PI * z) + std::log(sum);
}

}  // namespace

double log_gamma_omega(const ShapeVector& s) {
  const int r = s.size();
  double acc = 0.25 * r * (r - 1) * kLog2Pi;
  for (int i = 0; i < r; ++i) {
    double arg = s[i] - 0.5 * i;
    if (!(arg > 0.0))
      throw PoleError("log_gamma_omega: s_i - (i-1)/2 <= 0 (gamma pole)");
    acc += std::lgamma(arg);
  }
  return acc;
}

double log_bessel_i(double alpha, double z) {
  if (z < 0.0) throw DomainError("log_bessel_i: z must be >= 0");
  if (alpha <= -1.0) {
    double rounded = std::round(alpha);
    if (std::abs(alpha - rounded) > 1e-12)
      throw UnsupportedOrder("log_bessel_i: non-integer order <= -1");
    alpha = -rounded;  // I(-n, z) = I(n, z) for integer n
  }
  if (z == 0.0) {
    if (alpha == 0.0) return 0.0;
    if (alpha > 0.0) return -std::numeric_limits<double>::infinity();
    return std::numeric_limits<double>::infinity();  // -1 < alpha < 0
  }
  if (z <= kSeriesAsymptoticCrossover) return log_bessel_i_series(alpha, z);
  return log_bessel_i_asymptotic(alpha, z);
}

double g_series(double b, double x, double rel_tol) {
  if (!(b > 0.0)) throw DomainError("g_series: b must be > 0");
  if (x < 0.0) throw DomainError("g_series: x must be >= 0");
  double term = std::exp(-std::lgamma(b));  // k = 0
  double sum = term;
  for (int k = 0; k < 100000; ++k) {
    term *= x / ((k + 1.0) * (k + b));
    if (term < rel_tol * sum) break;
    sum += term;
  }
  return sum;
}

}  // namespace rieszmix
