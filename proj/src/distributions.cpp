#include "rieszmix/distributions.hpp"

#include <cmath>
#include <limits>

#include "rieszmix/specfun.hpp"
#include "rieszmix/symcone.hpp"

namespace rieszmix {

namespace {

const double kLog2Pi = std::log(2.0 * M_PI);

// Stable log-sum-exp of a stream of log terms.
class LogSumAccumulator {
 public:
  void add(double log_term) {
    if (log_term == -std::numeric_limits<double>::infinity()) return;
    if (log_term > max_) {
      sum_ *= std::exp(max_ - log_term);
      max_ = log_term;
    }
    sum_ += std::exp(log_term - max_);
  }
  double log_sum() const {
    if (sum_ == 0.0) return -std::numeric_limits<double>::infinity();
    return max_ + std::log(sum_);
  }

 private:
  double max_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
};

}  // namespace

double riesz_log_density(const SpdPoint& x, const RieszParams& p) {
  const int r = x.order();
  if (p.s.size() != r || p.sigma.order() != r)
    throw DimensionMismatch("riesz_log_density: order mismatch");
  if (!p.s.is_abs_continuous())
    throw BoundaryShape("riesz_log_density: s not absolutely continuous");
  const double n_over_r = 0.5 * (r + 1);
  SpdPoint sigma_inv = spd_inverse(p.sigma);
  return -(p.sigma.mat() * x.mat()).trace() +
         log_gen_power(x, p.s.shifted(-n_over_r)) - log_gamma_omega(p.s) -
         log_gen_power(sigma_inv, p.s);
}

double riesz_log_laplace(const SymmetricMatrix& theta, const RieszParams& p) {
  const int r = theta.order();
  if (p.s.size() != r || p.sigma.order() != r)
    throw DimensionMismatch("riesz_log_laplace: order mismatch");
  Eigen::MatrixXd gap = p.sigma.mat() - theta.mat();
  if (!is_spd(SymmetricMatrix(gap)))
    throw OutOfDomain("riesz_log_laplace: sigma - theta not in the cone");
  SpdPoint gap_inv(spd_inverse_mat(gap));
  return log_gen_power(gap_inv, p.s) - log_gen_power(spd_inverse(p.sigma), p.s);
}

SymmetricMatrix sample_riesz(const ShapeVector& s, RngStream& rng) {
  const int r = s.size();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(r, r);
  for (int i = 0; i < r; ++i) {
    double shape = s[i] - 0.5 * i;
    if (shape < -1e-12)
      throw DomainError("sample_riesz: s_i < (i-1)/2");
    t(i, i) = std::sqrt(rng.gamma(std::max(shape, 0.0)));
    for (int j = 0; j < i; ++j) t(i, j) = rng.normal(0.0, inv_sqrt2);
  }
  return SymmetricMatrix(t * t.transpose());
}

CountVector sample_poisson(const RateVector& lam, RngStream& rng) {
  CountVector k(lam.size());
  for (int i = 0; i < lam.size(); ++i) k[i] = rng.poisson(lam[i]);
  return k;
}

double mixture_log_density(const SpdPoint& x, const RateVector& lam) {
  const int r = x.order();
  if (lam.size() != r)
    throw DimensionMismatch("mixture_log_density: order mismatch");
  if (!lam.all_positive())
    throw DomainError("mixture_log_density: lambda_i must be > 0");
  TriangularFactor u = cholesky(x);
  double acc = -x.mat().trace() - 0.25 * r * (r - 1) * kLog2Pi;
  double log_minor = 0.0;  // log Delta_{i-1}(x), running
  for (int i = 0; i < r; ++i) {
    double log_ratio = 2.0 * std::log(u.diag(i));  // log Delta_{e_i}(x)
    // the 1/sqrt(det x) prefactor folds into 1/sqrt(Delta_i) per factor
    acc += 0.5 * std::log(lam[i]) - lam[i] - 0.5 * (log_minor + log_ratio);
    acc += log_bessel_i(1.0, 2.0 * std::exp(0.5 * (std::log(lam[i]) + log_ratio)));
    log_minor += log_ratio;
  }
  return acc;
}

double mixture_log_density_series(const SpdPoint& x, const RateVector& lam,
                                  int trunc) {
  const int r = x.order();
  if (lam.size() != r)
    throw DimensionMismatch("mixture_log_density_series: order mismatch");
  if (!lam.all_positive())
    throw DomainError("mixture_log_density_series: lambda_i must be > 0");
  if (trunc < 1) throw DomainError("mixture_log_density_series: trunc >= 1");

  TriangularFactor u = cholesky(x);
  const double n_over_r = 0.5 * (r + 1);
  // log Delta_{e_i}(x) from Cholesky diagonals; log Delta_s = sum_i s_i w_i.
  Eigen::VectorXd w(r);
  for (int i = 0; i < r; ++i) w(i) = 2.0 * std::log(u.diag(i));
  Eigen::VectorXd log_lam(r);
  for (int i = 0; i < r; ++i) log_lam(i) = std::log(lam[i]);

  const double log_gamma_prefix = 0.25 * r * (r - 1) * kLog2Pi;
  LogSumAccumulator acc;
  std::vector<int> q(r, 1);
  for (;;) {
    // Gamma_Omega(q + rho) has arguments q_i; any q_i = 0 kills the term,
    // so the enumeration starts at q = (1, ..., 1).
    double lt = 0.0;
    for (int i = 0; i < r; ++i) {
      double s_i = q[i] + 0.5 * i - n_over_r;
      lt += q[i] * log_lam(i) - std::lgamma(q[i] + 1.0) -
            std::lgamma(static_cast<double>(q[i])) + s_i * w(i);
    }
    lt -= log_gamma_prefix;
    acc.add(lt);
    int pos = r - 1;
    while (pos >= 0 && q[pos] == trunc) q[pos--] = 1;
    if (pos < 0) break;
    ++q[pos];
  }
  return -x.mat().trace() - lam.vec().sum() + acc.log_sum();
}

SymmetricMatrix sample_mixture(const RateVector& lam, RngStream& rng) {
  const int r = lam.size();
  CountVector k = sample_poisson(lam, rng);
  Eigen::VectorXd s(r);
  for (int i = 0; i < r; ++i) s(i) = k[i] + 0.5 * i;
  return sample_riesz(ShapeVector(s), rng);
}

}  // namespace rieszmix
