#ifndef RIESZMIX_DISTRIBUTIONS_HPP
#define RIESZMIX_DISTRIBUTIONS_HPP

#include <vector>

#include "rieszmix/rng.hpp"
#include "rieszmix/types.hpp"

namespace rieszmix {

/// Parameters (s, sigma) of the Riesz distribution R(s, sigma).
struct RieszParams {
  ShapeVector s;
  SpdPoint sigma;
};

/// Intensities of the multivariate Poisson mixing distribution. Samplers
/// accept zero components; density evaluation requires them strictly
/// positive.
class RateVector {
 public:
  explicit RateVector(Eigen::VectorXd lambda) : lambda_(std::move(lambda)) {
    if (lambda_.size() < 1) throw DimensionMismatch("RateVector: empty");
    for (int i = 0; i < lambda_.size(); ++i)
      if (!(lambda_(i) >= 0.0))
        throw DomainError("RateVector: lambda_i must be >= 0");
  }
  RateVector(std::initializer_list<double> l)
      : RateVector(Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(
            l.begin(), static_cast<Eigen::Index>(l.size())))) {}

  int size() const { return static_cast<int>(lambda_.size()); }
  double operator[](int i) const { return lambda_(i); }
  const Eigen::VectorXd& vec() const { return lambda_; }
  bool all_positive() const { return (lambda_.array() > 0.0).all(); }

 private:
  Eigen::VectorXd lambda_;
};

using CountVector = std::vector<long>;

/// log density of R(s, sigma) at x; requires s absolutely continuous.
double riesz_log_density(const SpdPoint& x, const RieszParams& p);

/// log L_{R(s,sigma)}(theta) = log Delta_s((sigma-theta)^{-1})
///                            - log Delta_s(sigma^{-1}).
double riesz_log_laplace(const SymmetricMatrix& theta, const RieszParams& p);

/// Bartlett-type draw from R(s, I_r): X = T T^T with T_ii^2 ~ Gamma(s_i -
/// (i-1)/2), T_ij ~ N(0, 1/2) below the diagonal. Boundary shapes (gamma
/// shape 0) give exact zeros on the diagonal.
SymmetricMatrix sample_riesz(const ShapeVector& s, RngStream& rng);

CountVector sample_poisson(const RateVector& lam, RngStream& rng);

/// log density of the Poisson mixture of R(k+rho, I_r), in Bessel form.
double mixture_log_density(const SpdPoint& x, const RateVector& lam);

/// Truncated pre-Bessel sum over q in {0..trunc}^r; the independent oracle
/// for mixture_log_density. Terms with any q_i = 0 vanish (1/Gamma(0) = 0).
double mixture_log_density_series(const SpdPoint& x, const RateVector& lam,
                                  int trunc);

/// Draw k ~ Poisson(lambda), then X ~ R(k + rho, I_r).
SymmetricMatrix sample_mixture(const RateVector& lam, RngStream& rng);

}  // namespace rieszmix

#endif  // RIESZMIX_DISTRIBUTIONS_HPP
