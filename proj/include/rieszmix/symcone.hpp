#ifndef RIESZMIX_SYMCONE_HPP
#define RIESZMIX_SYMCONE_HPP

#include <Eigen/Dense>

#include "rieszmix/types.hpp"

namespace rieszmix {

/// Cholesky factor u with x = u u^T, diagonal positive.
/// Throws NotPositiveDefinite when a pivot falls below the threshold
/// 1e-13 * max diagonal entry.
TriangularFactor cholesky(const SpdPoint& x);

/// Low-level factorization of a plain symmetric matrix; returns false
/// instead of throwing when x is not in the cone.
bool try_cholesky(const Eigen::MatrixXd& a, Eigen::MatrixXd& l);

bool is_spd(const SymmetricMatrix& x);

/// Inverse of an SPD matrix computed through its Cholesky factor.
SpdPoint spd_inverse(const SpdPoint& x);
Eigen::MatrixXd spd_inverse_mat(const Eigen::MatrixXd& a);

/// log Delta_s(x), evaluated from Cholesky diagonals:
/// log Delta_s(x) = sum_i 2 s_i log u_ii.
double log_gen_power(const SpdPoint& x, const ShapeVector& s);

/// log Delta*_s(x), the trailing-minor analogue.
double log_gen_power_star(const SpdPoint& x, const ShapeVector& s);

/// Leading principal minor Delta_k(x) from raw determinants. Test oracle
/// only; production paths go through Cholesky diagonals.
double leading_minor(const SymmetricMatrix& x, int k);

/// P(x) y = 2 L(x)(L(x) y) - L(x^2) y, with L(x) y = (xy + yx)/2.
SymmetricMatrix quad_rep_apply(const SymmetricMatrix& x,
                               const SymmetricMatrix& y);

/// The quadratic representation P(x) assembled as an operator matrix.
SymOperator quad_rep_operator(const SymmetricMatrix& x);

/// The cone automorphism u(y) = u y u^T.
SymmetricMatrix triangular_conjugate(const TriangularFactor& u,
                                     const SymmetricMatrix& y);

/// (P*_i(x))^{-1}: inverse of the trailing i x i block of x, embedded in an
/// r x r matrix padded with zeros. i = 0 gives the zero matrix.
SymmetricMatrix trailing_block_inverse(const SpdPoint& x, int i);

}  // namespace rieszmix

#endif  // RIESZMIX_SYMCONE_HPP
