#include <doctest.h>

#include <cmath>

#include "rieszmix/symcone.hpp"
#include "rieszmix/verify.hpp"

using namespace rieszmix;

namespace {

Eigen::MatrixXd mat2(double a, double b, double c, double d) {
  Eigen::MatrixXd m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("symmetric matrix construction") {
  Eigen::MatrixXd a = mat2(1.0, 2.0, 2.0 + 1e-14, 3.0);
  SymmetricMatrix s(a);
  CHECK(s.mat()(0, 1) == s.mat()(1, 0));  // bit-exact after symmetrization
  CHECK_THROWS_AS(SymmetricMatrix(mat2(1.0, 2.0, 5.0, 3.0)),
                  DimensionMismatch);
}

TEST_CASE("cholesky on hand-solved instances") {
  SpdPoint id(Eigen::MatrixXd::Identity(3, 3));
  CHECK(cholesky(id).mat().isApprox(Eigen::MatrixXd::Identity(3, 3), 1e-15));

  SpdPoint d(mat2(4.0, 0.0, 0.0, 9.0));
  Eigen::MatrixXd l = cholesky(d).mat();
  CHECK(l(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(l(1, 1) == doctest::Approx(3.0).epsilon(1e-14));

  SpdPoint x(mat2(2.0, 1.0, 1.0, 2.0));
  l = cholesky(x).mat();
  CHECK(l(0, 0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(l(1, 0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(l(1, 1) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-14));
}

TEST_CASE("cholesky rejects indefinite input") {
  CHECK_THROWS_AS(SpdPoint(mat2(1.0, 2.0, 2.0, 1.0)), NotPositiveDefinite);
  Eigen::MatrixXd l;
  CHECK_FALSE(try_cholesky(mat2(1.0, 2.0, 2.0, 1.0), l));
  CHECK_FALSE(try_cholesky(Eigen::MatrixXd::Zero(2, 2), l));
}

TEST_CASE("generalized power on leading minors") {
  SpdPoint x(mat2(2.0, 1.0, 1.0, 2.0));
  CHECK(log_gen_power(SpdPoint(Eigen::MatrixXd::Identity(4, 4)),
                      ShapeVector{1.0, -2.5, 0.0, 7.0}) == doctest::Approx(0.0));
  // s = (p, p) collapses to p log det
  CHECK(log_gen_power(x, ShapeVector{1.0, 1.0}) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-14));
  // Delta_1 = 2, Delta_2 = 3, s = (2, 1): 2^{2-1} * 3^1 = 6
  CHECK(log_gen_power(x, ShapeVector{2.0, 1.0}) ==
        doctest::Approx(std::log(6.0)).epsilon(1e-14));
}

TEST_CASE("generalized power star on trailing minors") {
  SpdPoint x(mat2(2.0, 1.0, 1.0, 2.0));
  CHECK(log_gen_power_star(SpdPoint(Eigen::MatrixXd::Identity(3, 3)),
                           ShapeVector{3.0, -1.0, 0.5}) ==
        doctest::Approx(0.0));
  CHECK(log_gen_power_star(x, ShapeVector{2.0, 2.0}) ==
        doctest::Approx(2.0 * std::log(3.0)).epsilon(1e-14));
  // Delta*_1 = x_22 = 2, Delta*_2 = 3, s = (2, 1): 2^1 * 3^1 = 6
  CHECK(log_gen_power_star(x, ShapeVector{2.0, 1.0}) ==
        doctest::Approx(std::log(6.0)).epsilon(1e-14));
}

TEST_CASE("quadratic representation") {
  SymmetricMatrix y(mat2(0.7, -0.2, -0.2, 1.3));
  CHECK(quad_rep_apply(SymmetricMatrix::identity(2), y).mat().isApprox(
      y.mat(), 1e-14));

  // P(diag(a,b)) [[p,q],[q,s]] = [[a^2 p, ab q],[ab q, b^2 s]]
  SymmetricMatrix d(mat2(2.0, 0.0, 0.0, 3.0));
  Eigen::MatrixXd got = quad_rep_apply(d, y).mat();
  CHECK(got(0, 0) == doctest::Approx(4.0 * 0.7).epsilon(1e-14));
  CHECK(got(0, 1) == doctest::Approx(6.0 * -0.2).epsilon(1e-14));
  CHECK(got(1, 1) == doctest::Approx(9.0 * 1.3).epsilon(1e-14));

  // P(x) x^{-1} = x
  RngStream rng(11);
  for (int r : {1, 2, 3, 4}) {
    SpdPoint x(random_spd(r, rng));
    Eigen::MatrixXd back =
        quad_rep_apply(x.sym(), SymmetricMatrix(spd_inverse_mat(x.mat()))).mat();
    CHECK((back - x.mat()).norm() / x.mat().norm() < 1e-12);
  }
}

TEST_CASE("triangular conjugation") {
  SymmetricMatrix y(mat2(0.7, -0.2, -0.2, 1.3));
  TriangularFactor id(Eigen::MatrixXd::Identity(2, 2));
  CHECK(triangular_conjugate(id, y).mat().isApprox(y.mat(), 1e-15));

  TriangularFactor d(mat2(2.0, 0.0, 0.0, 3.0));
  SymmetricMatrix c1(mat2(1.0, 0.0, 0.0, 0.0));
  Eigen::MatrixXd got = triangular_conjugate(d, c1).mat();
  CHECK(got(0, 0) == doctest::Approx(4.0));
  CHECK(got(1, 1) == doctest::Approx(0.0));

  // u(I) is the Cholesky round-trip
  RngStream rng(5);
  Eigen::MatrixXd l = random_lower_triangular(3, rng);
  CHECK(triangular_conjugate(TriangularFactor(l), SymmetricMatrix::identity(3))
            .mat()
            .isApprox(l * l.transpose(), 1e-14));
}

TEST_CASE("trailing block inverse") {
  SpdPoint id(Eigen::MatrixXd::Identity(3, 3));
  CHECK(trailing_block_inverse(id, 0).mat().isZero(0.0));
  Eigen::MatrixXd want = Eigen::MatrixXd::Zero(3, 3);
  want(1, 1) = want(2, 2) = 1.0;
  CHECK(trailing_block_inverse(id, 2).mat().isApprox(want, 1e-15));
  CHECK_THROWS_AS(trailing_block_inverse(id, 4), IndexOutOfRange);
  CHECK_THROWS_AS(trailing_block_inverse(id, -1), IndexOutOfRange);
}

TEST_CASE("gindikin and absolute continuity predicates") {
  CHECK(ShapeVector{1.0, 1.5}.is_abs_continuous());
  CHECK_FALSE(ShapeVector{1.0, 0.5}.is_abs_continuous());
  CHECK(ShapeVector{0.0, 1.5}.in_gindikin());
  CHECK_FALSE(ShapeVector{0.0, 1.5}.is_abs_continuous());
  CHECK_FALSE(ShapeVector{-0.1, 1.0}.in_gindikin());
  CHECK_FALSE(ShapeVector{0.3, 0.2}.in_gindikin());  // u_2 = 0.2 - 1/2 < 0
  // shapes the mixture uses: k + rho
  RngStream rng(3);
  for (int t = 0; t < 20; ++t) {
    int r = 1 + t % 5;
    Eigen::VectorXd s(r);
    for (int i = 0; i < r; ++i)
      s(i) = std::floor(4.0 * rng.uniform()) + 0.5 * i;
    CHECK(ShapeVector(s).in_gindikin());
  }
}

TEST_CASE("symmetric basis is orthonormal under tr(xy)") {
  for (int r : {1, 2, 4}) {
    auto basis = sym_basis(r);
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = 0; j < basis.size(); ++j) {
        double ip = (basis[i] * basis[j]).trace();
        CHECK(ip == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-14));
      }
    // coords round trip
    RngStream rng(7 + r);
    Eigen::MatrixXd x = random_spd(r, rng);
    CHECK(sym_from_coords(r, sym_to_coords(x)).isApprox(x, 1e-14));
  }
}

TEST_CASE("cone identity suite on random instances") {
  for (const auto& res : verify_identities(20260826, 200)) {
    INFO(res.check, " observed=", res.observed);
    CHECK(res.pass);
  }
}
