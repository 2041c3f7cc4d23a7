#ifndef RIESZMIX_NEF_HPP
#define RIESZMIX_NEF_HPP

#include "rieszmix/distributions.hpp"
#include "rieszmix/types.hpp"

namespace rieszmix {

/// Canonical parameter theta with I_r - theta in the cone.
class CanonicalParam {
 public:
  explicit CanonicalParam(const SymmetricMatrix& theta);
  int order() const { return theta_.order(); }
  const SymmetricMatrix& theta() const { return theta_; }
  /// I_r - theta, validated SPD at construction.
  const SpdPoint& identity_gap() const { return gap_; }

 private:
  SymmetricMatrix theta_;
  SpdPoint gap_;
};

/// Mean parameter m in Omega.
struct MeanPoint {
  SpdPoint m;
};

/// The coefficients a_i(theta) = (i-1)/2 + lambda_i u_i^2 and their
/// mean-side counterparts b_i(m) = (i-1)/4 + sqrt(((i-1)/4)^2 +
/// lambda_i Delta_{e_i}(m)); both solve the same fixed-point equation.
struct NefCoefficients {
  Eigen::VectorXd a;
  Eigen::VectorXd b;
};

/// Cumulant k_mu(theta) of the mixture: sum_i lambda_i
/// (Delta*_{-e_{r-i+1}}(I-theta) - 1) - (1/2) sum_{i<r} log Delta*_i(I-theta).
double cumulant(const CanonicalParam& theta, const RateVector& lam);

/// Mean map k'_mu(theta) = u(sum_i a_i(theta) c_i), u = chol((I-theta)^{-1}).
MeanPoint mean_map(const CanonicalParam& theta, const RateVector& lam);

NefCoefficients b_coeffs(const MeanPoint& m, const RateVector& lam);

/// Inverse mean map psi_mu(m) = I_r - (u u^T)^{-1} with
/// u = chol(m) diag(1/sqrt(b_i)).
CanonicalParam inverse_mean_map(const MeanPoint& m, const RateVector& lam);

/// Verification-only alternate route to psi_mu(m): reconstruct
/// (I - psi)^{-1} from trailing-block differences of m^{-1}.
CanonicalParam inverse_mean_map_blocks(const MeanPoint& m,
                                       const RateVector& lam);

/// Delta*_{-e_i}(I - psi_mu(m)) = Delta_{e_{r-i+1}}(m) / b_{r-i+1}(m),
/// i in 1..r.
double delta_star_at_psi(const MeanPoint& m, const RateVector& lam, int i);

/// Variance function V_F(m) = k''_mu(psi_mu(m)) as an operator on the
/// n-dimensional space of symmetric matrices.
SymOperator variance_function(const MeanPoint& m, const RateVector& lam);

}  // namespace rieszmix

#endif  // RIESZMIX_NEF_HPP
