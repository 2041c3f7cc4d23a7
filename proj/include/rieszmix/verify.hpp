#ifndef RIESZMIX_VERIFY_HPP
#define RIESZMIX_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rieszmix/oracle.hpp"

namespace rieszmix {

struct CheckResult {
  std::string check;
  bool pass = false;
  double observed = 0.0;   // worst error or |z| seen
  double tolerance = 0.0;
  std::string detail;      // optional serialized McReport or note

  std::string to_json() const;
};

/// Bessel identity g_b(x) = x^{(1-b)/2} I(b-1, 2 sqrt(x)) on the fixed grid.
std::vector<CheckResult> verify_prop1();

/// Cone identities on random instances, r in 1..5.
std::vector<CheckResult> verify_identities(std::uint64_t seed,
                                           int instances = 200);

/// Monte Carlo Laplace certification of the Riesz and mixture samplers.
std::vector<CheckResult> verify_laplace(std::uint64_t seed, long n = 1000000,
                                        int workers = 4);

/// Mean map against the finite-difference gradient of the cumulant.
std::vector<CheckResult> verify_gradient(std::uint64_t seed, int cases = 20);

/// Variance function against the finite-difference Hessian of the cumulant.
std::vector<CheckResult> verify_hessian(std::uint64_t seed, int cases = 20);

/// r = 1 quadrature mass + e^{-lambda} = 1.
std::vector<CheckResult> verify_normalize();

/// Bessel-form vs. truncated-series mixture log-density, r in {1,2,3}.
std::vector<CheckResult> verify_series(std::uint64_t seed, int cases = 50);

/// Scalar closed form V(m) = 2 m^{3/2} / sqrt(lambda) at r = 1.
std::vector<CheckResult> verify_scalar_variance();

/// mean_map / inverse_mean_map round trips and the b_i fixed point, r = 3.
std::vector<CheckResult> verify_inversion(std::uint64_t seed, int cases = 100);

/// Random theta in I - Omega map into Omega, r in {2,3,4}.
std::vector<CheckResult> verify_domain_of_means(std::uint64_t seed,
                                                int cases = 1000);

// Seeded generators shared by the suites and tests.
Eigen::MatrixXd random_spd(int r, RngStream& rng, double ridge = 0.3);
Eigen::MatrixXd random_lower_triangular(int r, RngStream& rng);
/// A theta with I - theta in Omega, bounded away from the boundary.
Eigen::MatrixXd random_canonical(int r, RngStream& rng);

}  // namespace rieszmix

#endif  // RIESZMIX_VERIFY_HPP
