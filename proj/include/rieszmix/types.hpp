#ifndef RIESZMIX_TYPES_HPP
#define RIESZMIX_TYPES_HPP

#include <Eigen/Dense>
#include <vector>

#include "rieszmix/errors.hpp"

namespace rieszmix {

/// An r x r real symmetric matrix. The constructor symmetrizes the input and
/// rejects it when the asymmetry exceeds the tolerance.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(const Eigen::MatrixXd& a, double tol = 1e-12);

  int order() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& mat() const { return m_; }
  double trace() const { return m_.trace(); }

  static SymmetricMatrix identity(int r) {
    return SymmetricMatrix(Eigen::MatrixXd::Identity(r, r));
  }
  static SymmetricMatrix zero(int r) {
    return SymmetricMatrix(Eigen::MatrixXd::Zero(r, r));
  }

 private:
  Eigen::MatrixXd m_;
};

/// Element of the lower triangular group T_l^+ (positive diagonal).
class TriangularFactor {
 public:
  explicit TriangularFactor(const Eigen::MatrixXd& l);

  int order() const { return static_cast<int>(l_.rows()); }
  const Eigen::MatrixXd& mat() const { return l_; }
  // u_i = <u, c_i>, the i-th diagonal entry (1-based in the formulas,
  // 0-based here).
  double diag(int i) const { return l_(i, i); }

 private:
  Eigen::MatrixXd l_;
};

/// Point of the open cone Omega of symmetric positive definite matrices.
/// Construction validates positive definiteness by Cholesky.
class SpdPoint {
 public:
  explicit SpdPoint(const SymmetricMatrix& x);
  explicit SpdPoint(const Eigen::MatrixXd& x) : SpdPoint(SymmetricMatrix(x)) {}

  int order() const { return base_.order(); }
  const SymmetricMatrix& sym() const { return base_; }
  const Eigen::MatrixXd& mat() const { return base_.mat(); }

 private:
  SymmetricMatrix base_;
};

/// Shape vector s in R^r indexing generalized powers and Riesz parameters.
class ShapeVector {
 public:
  explicit ShapeVector(Eigen::VectorXd s) : s_(std::move(s)) {
    if (s_.size() < 1) throw DimensionMismatch("ShapeVector: empty");
  }
  ShapeVector(std::initializer_list<double> s)
      : ShapeVector(Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(
            s.begin(), static_cast<Eigen::Index>(s.size())))) {}

  int size() const { return static_cast<int>(s_.size()); }
  double operator[](int i) const { return s_(i); }
  const Eigen::VectorXd& vec() const { return s_; }

  /// s_i > (i-1)/2 for all i: the Riesz measure R_s has a density on Omega.
  bool is_abs_continuous() const;

  /// Membership in the Gindikin set Xi, decided by a greedy left-to-right
  /// feasibility scan: u_1 = s_1, then u_k = s_k - (#{j<k : u_j > 0})/2,
  /// rejecting as soon as some u_k < 0.
  bool in_gindikin() const;

  /// s* = (s_r, ..., s_1).
  ShapeVector star_swap() const { return ShapeVector(s_.reverse().eval()); }

  ShapeVector shifted(double c) const {
    return ShapeVector((s_.array() + c).matrix().eval());
  }
  ShapeVector negated() const { return ShapeVector((-s_).eval()); }

  static ShapeVector constant(int r, double p) {
    return ShapeVector(Eigen::VectorXd::Constant(r, p));
  }
  /// rho = (0, 1/2, ..., (r-1)/2).
  static ShapeVector rho(int r);
  /// kappa_k embedded in R^r: entries j/2 for j = 1..k, zero above.
  static ShapeVector kappa(int r, int k);

 private:
  Eigen::VectorXd s_;
};

// Orthonormal basis of the space of r x r symmetric matrices under the
// tr(xy) scalar product: c_1..c_r first, then (E_ij + E_ji)/sqrt(2) for
// i < j in lexicographic order. n = r(r+1)/2.
int sym_dim(int r);
std::vector<Eigen::MatrixXd> sym_basis(int r);
Eigen::VectorXd sym_to_coords(const Eigen::MatrixXd& x);
Eigen::MatrixXd sym_from_coords(int r, const Eigen::VectorXd& c);

/// Linear map on the n-dimensional space of symmetric matrices, stored as an
/// n x n matrix in the fixed orthonormal basis above.
class SymOperator {
 public:
  SymOperator(int r, Eigen::MatrixXd mat);
  static SymOperator zero(int r) {
    int n = sym_dim(r);
    return SymOperator(r, Eigen::MatrixXd::Zero(n, n));
  }

  int order() const { return r_; }
  int dim() const { return static_cast<int>(mat_.rows()); }
  const Eigen::MatrixXd& mat() const { return mat_; }
  Eigen::MatrixXd& mat() { return mat_; }

  Eigen::MatrixXd apply(const Eigen::MatrixXd& y) const;
  bool is_symmetric(double tol = 1e-10) const;

 private:
  int r_;
  Eigen::MatrixXd mat_;
};

}  // namespace rieszmix

#endif  // RIESZMIX_TYPES_HPP
