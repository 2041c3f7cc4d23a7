#include "rieszmix/symcone.hpp"

#include <cmath>

namespace rieszmix {

namespace {

// Pivot threshold relative to the largest diagonal entry.
constexpr double kPivotRel = 1e-13;

}  // namespace

bool try_cholesky(const Eigen::MatrixXd& a, Eigen::MatrixXd& l) {
  const int r = static_cast<int>(a.rows());
  const double threshold = kPivotRel * std::max(0.0, a.diagonal().maxCoeff());
  l = Eigen::MatrixXd::Zero(r, r);
  for (int j = 0; j < r; ++j) {
    double d = a(j, j);
    for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > threshold)) return false;
    l(j, j) = std::sqrt(d);
    for (int i = j + 1; i < r; ++i) {
      double v = a(i, j);
      for (int k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = v / l(j, j);
    }
  }
  return true;
}

TriangularFactor cholesky(const SpdPoint& x) {
  Eigen::MatrixXd l;
  if (!try_cholesky(x.mat(), l))
    throw NotPositiveDefinite("cholesky: pivot <= 0, x not in the cone");
  return TriangularFactor(l);
}

bool is_spd(const SymmetricMatrix& x) {
  Eigen::MatrixXd l;
  return try_cholesky(x.mat(), l);
}

Eigen::MatrixXd spd_inverse_mat(const Eigen::MatrixXd& a) {
  Eigen::MatrixXd l;
  if (!try_cholesky(a, l))
    throw NotPositiveDefinite("spd_inverse: matrix not positive definite");
  const int r = static_cast<int>(a.rows());
  Eigen::MatrixXd inv = l.triangularView<Eigen::Lower>().solve(
      Eigen::MatrixXd::Identity(r, r));
  inv = l.transpose().triangularView<Eigen::Upper>().solve(inv);
  return 0.5 * (inv + inv.transpose());
}

SpdPoint spd_inverse(const SpdPoint& x) {
  return SpdPoint(spd_inverse_mat(x.mat()));
}

double log_gen_power(const SpdPoint& x, const ShapeVector& s) {
  if (s.size() != x.order())
    throw DimensionMismatch("log_gen_power: shape/order mismatch");
  TriangularFactor u = cholesky(x);
  double acc = 0.0;
  for (int i = 0; i < x.order(); ++i) acc += 2.0 * s[i] * std::log(u.diag(i));
  return acc;
}

double log_gen_power_star(const SpdPoint& x, const ShapeVector& s) {
  const int r = x.order();
  if (s.size() != r)
    throw DimensionMismatch("log_gen_power_star: shape/order mismatch");
  // Trailing minors of x are the leading minors of J x J, J the reversal.
  Eigen::MatrixXd rev = x.mat().reverse();
  Eigen::MatrixXd w;
  if (!try_cholesky(rev, w))
    throw NotPositiveDefinite("log_gen_power_star: x not in the cone");
  double acc = 0.0;
  for (int k = 0; k < r; ++k) acc += 2.0 * s[k] * std::log(w(k, k));
  return acc;
}

double leading_minor(const SymmetricMatrix& x, int k) {
  if (k < 0 || k > x.order())
    throw IndexOutOfRange("leading_minor: k out of range");
  if (k == 0) return 1.0;
  return x.mat().topLeftCorner(k, k).determinant();
}

SymmetricMatrix quad_rep_apply(const SymmetricMatrix& x,
                               const SymmetricMatrix& y) {
  if (x.order() != y.order())
    throw DimensionMismatch("quad_rep_apply: order mismatch");
  const Eigen::MatrixXd& a = x.mat();
  const Eigen::MatrixXd& b = y.mat();
  auto jordan = [](const Eigen::MatrixXd& p, const Eigen::MatrixXd& q) {
    return (0.5 * (p * q + q * p)).eval();
  };
  Eigen::MatrixXd ly = jordan(a, b);
  Eigen::MatrixXd res = 2.0 * jordan(a, ly) - jordan(a * a, b);
  return SymmetricMatrix(res);
}

SymOperator quad_rep_operator(const SymmetricMatrix& x) {
  const int r = x.order();
  auto basis = sym_basis(r);
  const int n = sym_dim(r);
  Eigen::MatrixXd op(n, n);
  for (int k = 0; k < n; ++k)
    op.col(k) = sym_to_coords(quad_rep_apply(x, SymmetricMatrix(basis[k])).mat());
  return SymOperator(r, op);
}

SymmetricMatrix triangular_conjugate(const TriangularFactor& u,
                                     const SymmetricMatrix& y) {
  if (u.order() != y.order())
    throw DimensionMismatch("triangular_conjugate: order mismatch");
  return SymmetricMatrix(u.mat() * y.mat() * u.mat().transpose());
}

SymmetricMatrix trailing_block_inverse(const SpdPoint& x, int i) {
  const int r = x.order();
  if (i < 0 || i > r)
    throw IndexOutOfRange("trailing_block_inverse: i out of range");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(r, r);
  if (i > 0) {
    Eigen::MatrixXd block = x.mat().bottomRightCorner(i, i);
    out.bottomRightCorner(i, i) = spd_inverse_mat(block);
  }
  return SymmetricMatrix(out);
}

}  // namespace rieszmix
