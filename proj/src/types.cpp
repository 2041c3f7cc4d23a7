#include "rieszmix/types.hpp"

#include <cmath>

#include "rieszmix/symcone.hpp"

namespace rieszmix {

SymmetricMatrix::SymmetricMatrix(const Eigen::MatrixXd& a, double tol) {
  if (a.rows() != a.cols() || a.rows() < 1)
    throw DimensionMismatch("SymmetricMatrix: matrix must be square, r >= 1");
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol * scale)
    throw DimensionMismatch("SymmetricMatrix: input not symmetric");
  m_ = 0.5 * (a + a.transpose());
}

TriangularFactor::TriangularFactor(const Eigen::MatrixXd& l) : l_(l) {
  if (l.rows() != l.cols() || l.rows() < 1)
    throw DimensionMismatch("TriangularFactor: matrix must be square");
  const int r = static_cast<int>(l.rows());
  for (int i = 0; i < r; ++i) {
    if (!(l(i, i) > 0.0))
      throw DomainError("TriangularFactor: diagonal must be positive");
    for (int j = i + 1; j < r; ++j)
      if (l(i, j) != 0.0)
        throw DomainError("TriangularFactor: upper part must be zero");
  }
}

SpdPoint::SpdPoint(const SymmetricMatrix& x) : base_(x) {
  if (!is_spd(x)) throw NotPositiveDefinite("SpdPoint: x not in the cone");
}

bool ShapeVector::is_abs_continuous() const {
  for (int i = 0; i < size(); ++i)
    if (!(s_(i) > 0.5 * i)) return false;
  return true;
}

bool ShapeVector::in_gindikin() const {
  int positive = 0;
  for (int k = 0; k < size(); ++k) {
    double u = s_(k) - 0.5 * positive;
    if (u < 0.0) return false;
    if (u > 0.0) ++positive;
  }
  return true;
}

ShapeVector ShapeVector::rho(int r) {
  Eigen::VectorXd v(r);
  for (int i = 0; i < r; ++i) v(i) = 0.5 * i;
  return ShapeVector(v);
}

ShapeVector ShapeVector::kappa(int r, int k) {
  if (k < 0 || k > r) throw IndexOutOfRange("kappa: k out of range");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(r);
  for (int j = 1; j <= k; ++j) v(j - 1) = 0.5 * j;
  return ShapeVector(v);
}

int sym_dim(int r) { return r * (r + 1) / 2; }

std::vector<Eigen::MatrixXd> sym_basis(int r) {
  std::vector<Eigen::MatrixXd> basis;
  basis.reserve(sym_dim(r));
  for (int i = 0; i < r; ++i) {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(r, r);
    b(i, i) = 1.0;
    basis.push_back(b);
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      Eigen::MatrixXd b = Eigen::MatrixXd::Zero(r, r);
      b(i, j) = b(j, i) = inv_sqrt2;
      basis.push_back(b);
    }
  return basis;
}

Eigen::VectorXd sym_to_coords(const Eigen::MatrixXd& x) {
  const int r = static_cast<int>(x.rows());
  Eigen::VectorXd c(sym_dim(r));
  int k = 0;
  for (int i = 0; i < r; ++i) c(k++) = x(i, i);
  const double sqrt2 = std::sqrt(2.0);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) c(k++) = sqrt2 * x(i, j);
  return c;
}

Eigen::MatrixXd sym_from_coords(int r, const Eigen::VectorXd& c) {
  if (c.size() != sym_dim(r))
    throw DimensionMismatch("sym_from_coords: wrong coordinate count");
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(r, r);
  int k = 0;
  for (int i = 0; i < r; ++i) x(i, i) = c(k++);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      x(i, j) = x(j, i) = inv_sqrt2 * c(k++);
    }
  return x;
}

SymOperator::SymOperator(int r, Eigen::MatrixXd mat) : r_(r), mat_(std::move(mat)) {
  const int n = sym_dim(r);
  if (mat_.rows() != n || mat_.cols() != n)
    throw DimensionMismatch("SymOperator: matrix must be n x n, n = r(r+1)/2");
}

Eigen::MatrixXd SymOperator::apply(const Eigen::MatrixXd& y) const {
  return sym_from_coords(r_, mat_ * sym_to_coords(y));
}

bool SymOperator::is_symmetric(double tol) const {
  double scale = std::max(1.0, mat_.norm());
  return (mat_ - mat_.transpose()).norm() <= tol * scale;
}

}  // namespace rieszmix
