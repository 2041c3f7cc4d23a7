#include "rieszmix/nef.hpp"

#include <cmath>

#include "rieszmix/symcone.hpp"

namespace rieszmix {

namespace {

// Unit shape vector e_i (1-based i).
ShapeVector unit_shape(int r, int i) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(r);
  v(i - 1) = 1.0;
  return ShapeVector(v);
}

// Delta*_{-e_i}(y) for y in Omega, 1-based i.
double delta_star_minus_e(const SpdPoint& y, int i) {
  return std::exp(log_gen_power_star(y, unit_shape(y.order(), i).negated()));
}

void check_orders(const CanonicalParam& theta, const RateVector& lam) {
  if (theta.order() != lam.size())
    throw DimensionMismatch("nef: theta/lambda order mismatch");
}

// Block differences D_j = (P*_{r-j+1}(m^{-1}))^{-1} - (P*_{r-j}(m^{-1}))^{-1}
// = v(c_j), j = 1..r, computed through trailing_block_inverse.
std::vector<Eigen::MatrixXd> block_differences(const SpdPoint& m_inv) {
  const int r = m_inv.order();
  std::vector<Eigen::MatrixXd> blocks(r + 1);
  for (int i = 0; i <= r; ++i)
    blocks[i] = trailing_block_inverse(m_inv, i).mat();
  std::vector<Eigen::MatrixXd> d(r + 1);  // 1-based j
  for (int j = 1; j <= r; ++j) d[j] = blocks[r - j + 1] - blocks[r - j];
  return d;
}

}  // namespace

CanonicalParam::CanonicalParam(const SymmetricMatrix& theta)
    : theta_(theta),
      gap_([&theta]() {
        const int r = theta.order();
        SymmetricMatrix gap(Eigen::MatrixXd::Identity(r, r) - theta.mat());
        if (!is_spd(gap))
          throw OutOfDomain("CanonicalParam: I - theta not in the cone");
        return SpdPoint(gap);
      }()) {}

double cumulant(const CanonicalParam& theta, const RateVector& lam) {
  check_orders(theta, lam);
  const int r = theta.order();
  const SpdPoint& gap = theta.identity_gap();
  // Closing factor prod_{i<r} Delta*_i(I-theta)^{-1/2}; its shape vector has
  // first differences -1/2 and last entry 0, i.e. -rho reversed.
  double acc = log_gen_power_star(gap, ShapeVector::rho(r).star_swap().negated());
  for (int i = 1; i <= r; ++i)
    acc += lam[i - 1] * (delta_star_minus_e(gap, r - i + 1) - 1.0);
  return acc;
}

MeanPoint mean_map(const CanonicalParam& theta, const RateVector& lam) {
  check_orders(theta, lam);
  const int r = theta.order();
  SpdPoint gap_inv = spd_inverse(theta.identity_gap());
  TriangularFactor u = cholesky(gap_inv);
  Eigen::VectorXd a(r);
  for (int i = 0; i < r; ++i)
    a(i) = 0.5 * i + lam[i] * u.diag(i) * u.diag(i);
  Eigen::MatrixXd m =
      u.mat() * a.asDiagonal() * u.mat().transpose();
  return MeanPoint{SpdPoint(m)};
}

NefCoefficients b_coeffs(const MeanPoint& m, const RateVector& lam) {
  const int r = m.m.order();
  if (lam.size() != r)
    throw DimensionMismatch("b_coeffs: order mismatch");
  TriangularFactor v = cholesky(m.m);
  Eigen::VectorXd b(r);
  for (int i = 0; i < r; ++i) {
    double quarter = 0.25 * i;
    double vi2 = v.diag(i) * v.diag(i);  // Delta_{e_i}(m)
    b(i) = quarter + std::sqrt(quarter * quarter + lam[i] * vi2);
  }
  return NefCoefficients{b, b};
}

CanonicalParam inverse_mean_map(const MeanPoint& m, const RateVector& lam) {
  const int r = m.m.order();
  NefCoefficients coeffs = b_coeffs(m, lam);
  TriangularFactor v = cholesky(m.m);
  Eigen::MatrixXd u = v.mat();
  for (int i = 0; i < r; ++i) u.col(i) /= std::sqrt(coeffs.b(i));
  Eigen::MatrixXd gap = spd_inverse_mat(u * u.transpose());
  return CanonicalParam(
      SymmetricMatrix(Eigen::MatrixXd(Eigen::MatrixXd::Identity(r, r) - gap)));
}

CanonicalParam inverse_mean_map_blocks(const MeanPoint& m,
                                       const RateVector& lam) {
  const int r = m.m.order();
  NefCoefficients coeffs = b_coeffs(m, lam);
  SpdPoint m_inv = spd_inverse(m.m);
  auto d = block_differences(m_inv);
  // (P*_r(I - psi))^{-1} = sum_j d_j / b_j is the whole of (I - psi)^{-1}.
  Eigen::MatrixXd gap_inv = Eigen::MatrixXd::Zero(r, r);
  for (int j = 1; j <= r; ++j) gap_inv += d[j] / coeffs.b(j - 1);
  Eigen::MatrixXd gap = spd_inverse_mat(gap_inv);
  return CanonicalParam(
      SymmetricMatrix(Eigen::MatrixXd(Eigen::MatrixXd::Identity(r, r) - gap)));
}

double delta_star_at_psi(const MeanPoint& m, const RateVector& lam, int i) {
  const int r = m.m.order();
  if (i < 1 || i > r) throw IndexOutOfRange("delta_star_at_psi: i out of range");
  NefCoefficients coeffs = b_coeffs(m, lam);
  TriangularFactor v = cholesky(m.m);
  double vv = v.diag(r - i);  // v_{r-i+1}
  return vv * vv / coeffs.b(r - i);
}

SymOperator variance_function(const MeanPoint& m, const RateVector& lam) {
  const int r = m.m.order();
  if (lam.size() != r) throw DimensionMismatch("variance_function: order mismatch");
  if (!lam.all_positive())
    throw DomainError("variance_function: lambda_i must be > 0");
  NefCoefficients coeffs = b_coeffs(m, lam);
  TriangularFactor v = cholesky(m.m);
  SpdPoint m_inv = spd_inverse(m.m);
  auto d = block_differences(m_inv);  // d[j] = v(c_j), 1-based

  // lambda_j Delta_{e_j}(m) / b_j, with the lambda_0 convention = 0.
  Eigen::VectorXd ratio(r + 1);
  ratio(0) = 0.0;
  for (int j = 1; j <= r; ++j) {
    double vj2 = v.diag(j - 1) * v.diag(j - 1);
    ratio(j) = lam[j - 1] * vj2 / coeffs.b(j - 1);
  }

  const int n = sym_dim(r);
  Eigen::MatrixXd op = Eigen::MatrixXd::Zero(n, n);

  // -1/2 P(sum_j d_j / b_j)
  Eigen::MatrixXd full = Eigen::MatrixXd::Zero(r, r);
  for (int j = 1; j <= r; ++j) full += d[j] / coeffs.b(j - 1);
  op -= 0.5 * quad_rep_operator(SymmetricMatrix(full)).mat();

  // middle sum: coefficients in i, inner block sums over j = r-i+1..r
  Eigen::MatrixXd partial = Eigen::MatrixXd::Zero(r, r);
  for (int i = 1; i <= r; ++i) {
    partial += d[r - i + 1] / coeffs.b(r - i);  // adds the j = r-i+1 term
    double coef = ratio(r - i + 1) - ratio(r - i) + 0.5;
    op += coef * quad_rep_operator(SymmetricMatrix(partial)).mat();
  }

  // rank-one tensor terms: d_i here is the block difference at index i,
  // i.e. v(c_{r-i+1})
  for (int i = 1; i <= r; ++i) {
    double coef = ratio(r - i + 1) / (coeffs.b(r - i) * coeffs.b(r - i));
    Eigen::VectorXd a = sym_to_coords(d[r - i + 1]);
    op += coef * (a * a.transpose());
  }

  return SymOperator(r, op);
}

}  // namespace rieszmix
