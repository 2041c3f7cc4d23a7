#include <doctest.h>

#include <cmath>

#include "rieszmix/distributions.hpp"
#include "rieszmix/oracle.hpp"
#include "rieszmix/specfun.hpp"
#include "rieszmix/symcone.hpp"
#include "rieszmix/verify.hpp"

using namespace rieszmix;

namespace {

Eigen::MatrixXd scalar(double v) {
  Eigen::MatrixXd m(1, 1);
  m(0, 0) = v;
  return m;
}

RieszParams params(ShapeVector s, const Eigen::MatrixXd& sigma) {
  return RieszParams{std::move(s), SpdPoint(sigma)};
}

}  // namespace

TEST_CASE("riesz log density scalar gamma reductions") {
  // s = 1, sigma = 1: exponential density e^{-x}
  CHECK(riesz_log_density(SpdPoint(scalar(1.0)),
                          params(ShapeVector{1.0}, scalar(1.0))) ==
        doctest::Approx(-1.0).epsilon(1e-14));
  // s = 2, sigma = 1, x = 3: Gamma(2,1) density x e^{-x}
  CHECK(riesz_log_density(SpdPoint(scalar(3.0)),
                          params(ShapeVector{2.0}, scalar(1.0))) ==
        doctest::Approx(std::log(3.0) - 3.0).epsilon(1e-14));
}

TEST_CASE("riesz log density r=2 with vanishing power exponent") {
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2, 2);
  double want = -2.0 - std::log(std::sqrt(2.0 * M_PI) * std::tgamma(1.5));
  CHECK(riesz_log_density(SpdPoint(id), params(ShapeVector{1.5, 1.5}, id)) ==
        doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("riesz density rejects boundary shapes") {
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2, 2);
  CHECK_THROWS_AS(
      riesz_log_density(SpdPoint(id), params(ShapeVector{0.0, 1.5}, id)),
      BoundaryShape);
}

TEST_CASE("riesz laplace transform") {
  CHECK(riesz_log_laplace(SymmetricMatrix::zero(2),
                          params(ShapeVector{1.0, 2.0},
                                 Eigen::MatrixXd::Identity(2, 2))) ==
        doctest::Approx(0.0));
  // scalar (1 - theta)^{-p}
  for (double p : {0.5, 1.0, 3.0})
    CHECK(riesz_log_laplace(SymmetricMatrix(scalar(0.5)),
                            params(ShapeVector{p}, scalar(1.0))) ==
          doctest::Approx(p * std::log(2.0)).epsilon(1e-14));
  // Wishart reduction: det(I - theta)^{-p} at theta = -I
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2, 2);
  CHECK(riesz_log_laplace(SymmetricMatrix(Eigen::MatrixXd(-id)),
                          params(ShapeVector{2.0, 2.0}, id)) ==
        doctest::Approx(-2.0 * std::log(4.0)).epsilon(1e-14));
  CHECK_THROWS_AS(riesz_log_laplace(SymmetricMatrix(Eigen::MatrixXd(2.0 * id)),
                                    params(ShapeVector{1.0, 1.0}, id)),
                  OutOfDomain);
}

TEST_CASE("wishart reduction of the riesz density") {
  // s = (p, p) must reproduce the explicit Wishart density
  RngStream rng(42);
  for (int t = 0; t < 10; ++t) {
    int r = 1 + t % 3;
    double p = 0.5 * (r - 1) + 0.4 + rng.uniform();
    SpdPoint x(random_spd(r, rng));
    SpdPoint sigma(random_spd(r, rng));
    double got =
        riesz_log_density(x, params(ShapeVector::constant(r, p), sigma.mat()));
    double want = -(sigma.mat() * x.mat()).trace() +
                  (p - 0.5 * (r + 1)) * std::log(x.mat().determinant()) -
                  log_gamma_omega(ShapeVector::constant(r, p)) +
                  p * std::log(sigma.mat().determinant());
    CHECK(std::abs(got - want) <= 1e-10 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("mixture log density closed values") {
  // r=1, lambda=1, x=1: e^{-2} I(1,2), via the series oracle
  double want = 0.0;
  for (int q = 1; q <= 40; ++q)
    want += std::exp(-2.0 - std::lgamma(q + 1.0) - std::lgamma(q));
  double got = mixture_log_density(SpdPoint(scalar(1.0)), RateVector{1.0});
  CHECK(got == doctest::Approx(std::log(want)).epsilon(1e-12));

  // r=2, lambda=(1,1), x=I
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2, 2);
  double want2 = -4.0 + 2.0 * log_bessel_i(1.0, 2.0) -
                 0.5 * std::log(2.0 * M_PI);
  CHECK(mixture_log_density(SpdPoint(id), RateVector{1.0, 1.0}) ==
        doctest::Approx(want2).epsilon(1e-13));
}

TEST_CASE("mixture log density small-x stability") {
  // density -> lambda e^{-lambda} as x -> 0+
  double got = mixture_log_density(SpdPoint(scalar(1e-8)), RateVector{1.0});
  CHECK(got == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("mixture density rejects zero rates") {
  CHECK_THROWS_AS(mixture_log_density(SpdPoint(scalar(1.0)),
                                      RateVector{0.0}),
                  DomainError);
}

TEST_CASE("series oracle agrees with the bessel form") {
  CHECK(mixture_log_density_series(SpdPoint(scalar(1.0)), RateVector{1.0}, 60) ==
        doctest::Approx(mixture_log_density(SpdPoint(scalar(1.0)),
                                            RateVector{1.0}))
            .epsilon(1e-10));
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2, 2);
  CHECK(mixture_log_density_series(SpdPoint(id), RateVector{1.0, 1.0}, 40) ==
        doctest::Approx(mixture_log_density(SpdPoint(id), RateVector{1.0, 1.0}))
            .epsilon(1e-10));
  // one-term expansion at tiny lambda
  double lam = 1e-3, x = 0.7;
  double truncated =
      mixture_log_density_series(SpdPoint(scalar(x)), RateVector{lam}, 1);
  CHECK(truncated ==
        doctest::Approx(std::log(lam) - lam - x).epsilon(1e-5));
}

TEST_CASE("series vs bessel on random instances") {
  for (const auto& res : verify_series(91, 30)) {
    INFO(res.check, " observed=", res.observed);
    CHECK(res.pass);
  }
}

TEST_CASE("poisson sampler moments and laplace") {
  RngStream rng(123);
  CHECK(sample_poisson(RateVector{0.0, 0.0}, rng) == CountVector{0, 0});

  const long n = 100000;
  double s1 = 0, s2 = 0, lap = 0, lap_sq = 0;
  for (long i = 0; i < n; ++i) {
    CountVector k = sample_poisson(RateVector{1.0, 2.0}, rng);
    s1 += k[0];
    s2 += k[1];
    double v = std::exp(-1.0 * k[0] - 1.0 * k[1]);
    lap += v;
    lap_sq += v * v;
  }
  CHECK(std::abs(s1 / n - 1.0) < 3.0 * std::sqrt(1.0 / n));
  CHECK(std::abs(s2 / n - 2.0) < 3.0 * std::sqrt(2.0 / n));
  // E[e^{<theta,k>}] at theta = (-1,-1) vs prod exp(lambda_i(e^{-1}-1))
  double want = std::exp(3.0 * (std::exp(-1.0) - 1.0));
  double est = lap / n;
  double se = std::sqrt((lap_sq / n - est * est) / n);
  CHECK(std::abs(est - want) < 3.0 * se);
}

TEST_CASE("riesz sampler scalar and wishart moments") {
  RngStream rng(7);
  const long n = 100000;
  double acc = 0.0;
  for (long i = 0; i < n; ++i)
    acc += sample_riesz(ShapeVector{1.7}, rng).mat()(0, 0);
  CHECK(std::abs(acc / n - 1.7) < 3.0 * std::sqrt(1.7 / n));

  Eigen::MatrixXd mean = Eigen::MatrixXd::Zero(2, 2);
  for (long i = 0; i < n; ++i)
    mean += sample_riesz(ShapeVector{2.0, 2.0}, rng).mat();
  mean /= n;
  // Wishart mean p sigma^{-1} = 2 I; entry std errors ~ sqrt(2p)/sqrt(n)
  CHECK(std::abs(mean(0, 0) - 2.0) < 3.0 * std::sqrt(4.0 / n));
  CHECK(std::abs(mean(1, 1) - 2.0) < 3.0 * std::sqrt(4.0 / n));
  CHECK(std::abs(mean(0, 1) - 0.0) < 3.0 * std::sqrt(2.0 / n));
}

TEST_CASE("riesz sampler boundary shape law") {
  // s = (0, 3/2): X = [[0,0],[0,g]], E[e^{0.3 g}] = (1 - 0.3)^{-3/2}
  RngStream rng(101);
  const long n = 200000;
  double acc = 0, acc_sq = 0;
  for (long i = 0; i < n; ++i) {
    Eigen::MatrixXd x = sample_riesz(ShapeVector{0.0, 1.5}, rng).mat();
    CHECK(x(0, 0) == 0.0);
    CHECK(x(0, 1) == 0.0);
    double v = std::exp(0.3 * x(1, 1));
    acc += v;
    acc_sq += v * v;
  }
  double est = acc / n;
  double want = std::pow(0.7, -1.5);
  double se = std::sqrt((acc_sq / n - est * est) / n);
  CHECK(std::abs(est - want) < 4.0 * se);

  CHECK_THROWS_AS(sample_riesz(ShapeVector{0.0, 0.3}, rng), DomainError);
}

TEST_CASE("mixture sampler degenerate and mean behaviour") {
  RngStream rng(55);
  // lambda = 0 at r = 1: k = 0 and the shape is 0, so the draw is exactly 0
  CHECK(sample_mixture(RateVector{0.0}, rng).mat().isZero(0.0));
  // at r = 2 the k = 0 draw is rank one: first row/column exactly zero, the
  // trailing entry Gamma(1/2)-distributed
  Eigen::MatrixXd z2 = sample_mixture(RateVector{0.0, 0.0}, rng).mat();
  CHECK(z2(0, 0) == 0.0);
  CHECK(z2(0, 1) == 0.0);
  CHECK(z2(1, 1) >= 0.0);

  const long n = 100000;
  double acc = 0.0;
  for (long i = 0; i < n; ++i)
    acc += sample_mixture(RateVector{1.0}, rng).mat()(0, 0);
  // var of a compound Poisson-Gamma with rate 1 is k''(0) = 2 lambda = 2
  CHECK(std::abs(acc / n - 1.0) < 3.0 * std::sqrt(2.0 / n));

  Eigen::MatrixXd mean = Eigen::MatrixXd::Zero(2, 2);
  for (long i = 0; i < n; ++i)
    mean += sample_mixture(RateVector{1.0, 2.0}, rng).mat();
  mean /= n;
  CHECK(std::abs(mean(0, 0) - 1.0) < 5.0 * std::sqrt(2.0 / n));
  CHECK(std::abs(mean(1, 1) - 2.5) < 5.0 * std::sqrt(5.0 / n));
}
