#ifndef RIESZMIX_ORACLE_HPP
#define RIESZMIX_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "rieszmix/distributions.hpp"
#include "rieszmix/rng.hpp"
#include "rieszmix/types.hpp"

namespace rieszmix {

using ScalarField = std::function<double(const Eigen::MatrixXd&)>;
using MatrixSampler = std::function<Eigen::MatrixXd(RngStream&)>;

struct McReport {
  std::string check;
  double estimate = 0.0;
  double closed_form = 0.0;
  double std_error = 0.0;
  double z_score = 0.0;
  long n = 0;
  std::uint64_t seed = 0;
  bool pass = false;

  std::string to_json() const;
};

/// Central-difference gradient along the orthonormal symmetric-matrix basis,
/// reassembled as a symmetric matrix in entry coordinates.
Eigen::MatrixXd fd_gradient(const ScalarField& f, const Eigen::MatrixXd& at,
                            double step);

/// Second-order central-stencil Hessian, symmetrized.
SymOperator fd_hessian(const ScalarField& f, const Eigen::MatrixXd& at,
                       double step);

/// Monte Carlo estimate of E[e^{<theta, X>}] against a closed-form log
/// Laplace transform. Deterministic for fixed (seed, workers): the sample
/// count is split into per-worker substreams and partial sums are combined
/// in worker order.
McReport mc_laplace_check(const MatrixSampler& sampler, double log_laplace,
                          const Eigen::MatrixXd& theta, long n,
                          std::uint64_t seed, int workers = 4,
                          double z_threshold = 4.0);

/// Adaptive quadrature of exp(mixture_log_density) over (0, x_max), r = 1.
/// The mixture has an atom of mass e^{-lambda} at zero, so the integral is
/// 1 - e^{-lambda}.
double normalization_check_r1(const RateVector& lam, double x_max);

/// Worker-count override from RIESZ_MIX_THREADS, default fallback otherwise.
int default_workers(int fallback = 4);

}  // namespace rieszmix

#endif  // RIESZMIX_ORACLE_HPP
