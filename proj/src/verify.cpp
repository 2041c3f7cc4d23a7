#include "rieszmix/verify.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <nlohmann/json.hpp>

#include "rieszmix/nef.hpp"
#include "rieszmix/specfun.hpp"
#include "rieszmix/symcone.hpp"

namespace rieszmix {

namespace {

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

double operator_norm(const Eigen::MatrixXd& a) {
  Eigen::MatrixXd s = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

CheckResult make_result(std::string name, double observed, double tol,
                        std::string detail = "") {
  CheckResult res;
  res.check = std::move(name);
  res.observed = observed;
  res.tolerance = tol;
  res.pass = observed <= tol;
  res.detail = std::move(detail);
  return res;
}

ShapeVector random_shape(int r, RngStream& rng) {
  Eigen::VectorXd s(r);
  for (int i = 0; i < r; ++i) s(i) = 2.0 * rng.normal(0.0, 1.0);
  return ShapeVector(s);
}

}  // namespace

std::string CheckResult::to_json() const {
  nlohmann::json j{{"check", check},
                   {"pass", pass},
                   {"observed", observed},
                   {"tolerance", tolerance}};
  if (!detail.empty()) j["detail"] = detail;
  return j.dump();
}

Eigen::MatrixXd random_spd(int r, RngStream& rng, double ridge) {
  Eigen::MatrixXd a(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a(i, j) = rng.normal(0.0, 1.0);
  return Eigen::MatrixXd(a * a.transpose() / r +
                         ridge * Eigen::MatrixXd::Identity(r, r));
}

Eigen::MatrixXd random_lower_triangular(int r, RngStream& rng) {
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(r, r);
  for (int i = 0; i < r; ++i) {
    l(i, i) = std::exp(rng.normal(0.0, 0.3));
    for (int j = 0; j < i; ++j) l(i, j) = rng.normal(0.0, 0.5);
  }
  return l;
}

Eigen::MatrixXd random_canonical(int r, RngStream& rng) {
  // I - theta = y with eigenvalues bounded away from 0
  Eigen::MatrixXd y = random_spd(r, rng, 0.4);
  return Eigen::MatrixXd(Eigen::MatrixXd::Identity(r, r) - y);
}

std::vector<CheckResult> verify_prop1() {
  const double grid_b[] = {0.5, 1.0, 1.5, 2.0, 5.5};
  const double grid_x[] = {0.1, 1.0, 10.0, 100.0};
  double worst = 0.0;
  for (double b : grid_b)
    for (double x : grid_x) {
      double lhs = g_series(b, x);
      double rhs = std::pow(x, 0.5 * (1.0 - b)) *
                   std::exp(log_bessel_i(b - 1.0, 2.0 * std::sqrt(x)));
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
  return {make_result("prop1_bessel_identity_grid", worst, 1e-10)};
}

std::vector<CheckResult> verify_identities(std::uint64_t seed, int instances) {
  RngStream rng(seed);
  double worst_inv_dual = 0.0, worst_conj_minor = 0.0, worst_fact_dual = 0.0, worst_trail = 0.0;
  double worst_quad = 0.0, worst_chol = 0.0, worst_minor = 0.0;
  for (int t = 0; t < instances; ++t) {
    int r = 1 + t % 5;
    Eigen::MatrixXd lmat = random_lower_triangular(r, rng);
    TriangularFactor u(lmat);
    SpdPoint x(random_spd(r, rng));
    ShapeVector s = random_shape(r, rng);

    // Cholesky round-trip
    TriangularFactor cx = cholesky(x);
    worst_chol = std::max(
        worst_chol, (cx.mat() * cx.mat().transpose() - x.mat()).norm() /
                        x.mat().norm());

    // Delta_s(x^{-1}) = Delta*_{-s*}(x)
    double lhs = log_gen_power(spd_inverse(x), s);
    double rhs = log_gen_power_star(x, s.star_swap().negated());
    worst_inv_dual = std::max(worst_inv_dual, rel_err(lhs, rhs));

    // Delta_i(u(x)) = u_1^2...u_i^2 Delta_i(x)
    SpdPoint ux(triangular_conjugate(u, x.sym()).mat());
    double diag_acc = 0.0;
    for (int i = 1; i <= r; ++i) {
      Eigen::VectorXd lead = Eigen::VectorXd::Zero(r);
      lead.head(i).setOnes();
      diag_acc += 2.0 * std::log(u.diag(i - 1));
      double a = log_gen_power(ux, ShapeVector(lead));
      double b = diag_acc + log_gen_power(x, ShapeVector(lead));
      worst_conj_minor = std::max(worst_conj_minor, rel_err(a, b));
    }

    // Delta_s(u(I)) = Delta*_{-s*}((u u^T)^{-1})
    SpdPoint uut(lmat * lmat.transpose());
    double r1_lhs = log_gen_power(uut, s);
    double r1_rhs = log_gen_power_star(spd_inverse(uut), s.star_swap().negated());
    worst_fact_dual = std::max(worst_fact_dual, rel_err(r1_lhs, r1_rhs));

    // (P*_i((u(I))^{-1}))^{-1} = u(sum_{k>=r-i+1} c_k)
    SpdPoint uut_inv = spd_inverse(uut);
    for (int i = 0; i <= r; ++i) {
      Eigen::MatrixXd want = Eigen::MatrixXd::Zero(r, r);
      for (int k = r - i; k < r; ++k) want(k, k) = 1.0;
      want = lmat * want * lmat.transpose();
      Eigen::MatrixXd got = trailing_block_inverse(uut_inv, i).mat();
      double denom = std::max(1.0, want.norm());
      worst_trail = std::max(worst_trail, (got - want).norm() / denom);
    }

    // P(x) y = x y x
    SymmetricMatrix y(random_spd(r, rng, 0.0));
    Eigen::MatrixXd pxy = quad_rep_apply(x.sym(), y).mat();
    Eigen::MatrixXd xyx = x.mat() * y.mat() * x.mat();
    worst_quad = std::max(worst_quad, (pxy - xyx).norm() / xyx.norm());

    // log_gen_power with s = e_i vs raw minors
    for (int i = 1; i <= r; ++i) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(r);
      e(i - 1) = 1.0;
      double got = log_gen_power(x, ShapeVector(e));
      double want = std::log(leading_minor(x.sym(), i) /
                             leading_minor(x.sym(), i - 1));
      worst_minor = std::max(worst_minor, rel_err(got, want));
    }
  }
  return {make_result("cholesky_roundtrip", worst_chol, 1e-12),
          make_result("gen_power_inverse_duality", worst_inv_dual, 1e-10),
          make_result("triangular_conjugation_minors", worst_conj_minor, 1e-10),
          make_result("factor_inverse_duality", worst_fact_dual, 1e-10),
          make_result("trailing_block_conjugation", worst_trail, 1e-10),
          make_result("quad_rep_closed_form", worst_quad, 1e-12),
          make_result("gen_power_vs_raw_minors", worst_minor, 1e-9)};
}

std::vector<CheckResult> verify_laplace(std::uint64_t seed, long n,
                                        int workers) {
  std::vector<CheckResult> out;
  RngStream theta_rng(seed, 1000);

  auto riesz_case = [&](const ShapeVector& s, const std::string& name) {
    const int r = s.size();
    RieszParams params{s, SpdPoint(Eigen::MatrixXd::Identity(r, r))};
    for (int t = 0; t < 5; ++t) {
      // theta = I/4 - q keeps 2*theta inside the domain, so the second
      // moment of e^{<theta,X>} stays finite
      Eigen::MatrixXd theta =
          0.25 * Eigen::MatrixXd::Identity(r, r) - random_spd(r, theta_rng);
      double log_lt = riesz_log_laplace(SymmetricMatrix(theta), params);
      auto sampler = [&s](RngStream& rng) { return sample_riesz(s, rng).mat(); };
      McReport rep = mc_laplace_check(sampler, log_lt, theta, n,
                                      seed + 17 * t + 1, workers);
      rep.check = name + "_theta" + std::to_string(t);
      out.push_back(make_result(rep.check, std::abs(rep.z_score), 4.0,
                                rep.to_json()));
    }
  };

  riesz_case(ShapeVector{1.0}, "riesz_r1_s1");
  riesz_case(ShapeVector{1.5, 2.5}, "riesz_r2_interior");
  riesz_case(ShapeVector{0.0, 1.5}, "riesz_r2_boundary");

  auto mixture_case = [&](const RateVector& lam, const std::string& name) {
    const int r = lam.size();
    for (int t = 0; t < 5; ++t) {
      Eigen::MatrixXd theta =
          0.25 * Eigen::MatrixXd::Identity(r, r) - random_spd(r, theta_rng);
      double log_lt = cumulant(CanonicalParam(SymmetricMatrix(theta)), lam);
      auto sampler = [&lam](RngStream& rng) {
        return sample_mixture(lam, rng).mat();
      };
      McReport rep = mc_laplace_check(sampler, log_lt, theta, n,
                                      seed + 31 * t + 7, workers);
      rep.check = name + "_theta" + std::to_string(t);
      out.push_back(make_result(rep.check, std::abs(rep.z_score), 4.0,
                                rep.to_json()));
    }
  };

  mixture_case(RateVector{1.0}, "mixture_r1");
  mixture_case(RateVector{1.0, 2.0}, "mixture_r2");
  return out;
}

std::vector<CheckResult> verify_gradient(std::uint64_t seed, int cases) {
  RngStream rng(seed);
  double worst = 0.0;
  for (int t = 0; t < cases; ++t) {
    int r = 1 + t % 3;
    Eigen::MatrixXd theta = random_canonical(r, rng);
    Eigen::VectorXd lv(r);
    for (int i = 0; i < r; ++i) lv(i) = 0.3 + 2.0 * rng.uniform();
    RateVector lam(lv);

    auto f = [&lam](const Eigen::MatrixXd& th) {
      return cumulant(CanonicalParam(SymmetricMatrix(th)), lam);
    };
    double step = 1e-5 * (1.0 + theta.norm());
    Eigen::MatrixXd grad = fd_gradient(f, theta, step);
    Eigen::MatrixXd mean =
        mean_map(CanonicalParam(SymmetricMatrix(theta)), lam).m.mat();
    worst = std::max(worst, (grad - mean).norm() / (1.0 + mean.norm()));
  }
  return {make_result("mean_map_vs_fd_gradient", worst, 1e-6)};
}

std::vector<CheckResult> verify_hessian(std::uint64_t seed, int cases) {
  RngStream rng(seed);
  double worst = 0.0;
  for (int t = 0; t < cases; ++t) {
    int r = 1 + t % 3;
    Eigen::MatrixXd theta = random_canonical(r, rng);
    Eigen::VectorXd lv(r);
    for (int i = 0; i < r; ++i) lv(i) = 0.3 + 2.0 * rng.uniform();
    RateVector lam(lv);

    auto f = [&lam](const Eigen::MatrixXd& th) {
      return cumulant(CanonicalParam(SymmetricMatrix(th)), lam);
    };
    double step = 5e-4 * (1.0 + theta.norm());
    SymOperator h = fd_hessian(f, theta, step);
    MeanPoint m = mean_map(CanonicalParam(SymmetricMatrix(theta)), lam);
    SymOperator v = variance_function(m, lam);
    worst = std::max(worst,
                     operator_norm(h.mat() - v.mat()) / operator_norm(v.mat()));
  }
  return {make_result("variance_function_vs_fd_hessian", worst, 1e-4)};
}

std::vector<CheckResult> verify_normalize() {
  std::vector<CheckResult> out;
  const double lambdas[] = {0.5, 1.0, 5.0};
  for (double lambda : lambdas) {
    double x_max = lambda > 2.0 ? 120.0 : 60.0;
    double mass = normalization_check_r1(RateVector{lambda}, x_max);
    double defect = std::abs(mass + std::exp(-lambda) - 1.0);
    out.push_back(make_result(
        "normalization_r1_lambda" + std::to_string(lambda), defect, 1e-6));
  }
  return out;
}

std::vector<CheckResult> verify_series(std::uint64_t seed, int cases) {
  RngStream rng(seed);
  double worst = 0.0;
  for (int t = 0; t < cases; ++t) {
    int r = 1 + t % 3;
    SpdPoint x(random_spd(r, rng));
    Eigen::VectorXd lv(r);
    for (int i = 0; i < r; ++i) lv(i) = 0.2 + 1.8 * rng.uniform();
    RateVector lam(lv);
    int trunc = r == 1 ? 60 : (r == 2 ? 45 : 35);
    double bessel = mixture_log_density(x, lam);
    double series = mixture_log_density_series(x, lam, trunc);
    worst = std::max(worst, rel_err(series, bessel));
  }
  return {make_result("mixture_bessel_vs_series", worst, 1e-9)};
}

std::vector<CheckResult> verify_scalar_variance() {
  const double lambdas[] = {0.5, 1.0, 4.0};
  const double means[] = {0.25, 1.0, 9.0};
  double worst = 0.0;
  for (double lambda : lambdas)
    for (double mv : means) {
      Eigen::MatrixXd mm(1, 1);
      mm(0, 0) = mv;
      SymOperator v = variance_function(MeanPoint{SpdPoint(mm)},
                                        RateVector{lambda});
      double want = 2.0 * std::pow(mv, 1.5) / std::sqrt(lambda);
      worst = std::max(worst, std::abs(v.mat()(0, 0) - want) / want);
    }
  return {make_result("scalar_variance_closed_form", worst, 1e-10)};
}

std::vector<CheckResult> verify_inversion(std::uint64_t seed, int cases) {
  RngStream rng(seed);
  const int r = 3;
  double worst_round = 0.0, worst_paths = 0.0, worst_fixed = 0.0;
  for (int t = 0; t < cases; ++t) {
    SpdPoint m(random_spd(r, rng));
    Eigen::VectorXd lv(r);
    for (int i = 0; i < r; ++i) lv(i) = 0.3 + 2.0 * rng.uniform();
    RateVector lam(lv);
    MeanPoint mp{m};

    CanonicalParam theta = inverse_mean_map(mp, lam);
    Eigen::MatrixXd m_back = mean_map(theta, lam).m.mat();
    worst_round =
        std::max(worst_round, (m_back - m.mat()).norm() / m.mat().norm());

    CanonicalParam theta_alt = inverse_mean_map_blocks(mp, lam);
    worst_paths = std::max(
        worst_paths, (theta.theta().mat() - theta_alt.theta().mat()).norm() /
                         std::max(1.0, theta.theta().mat().norm()));

    NefCoefficients coeffs = b_coeffs(mp, lam);
    TriangularFactor v = cholesky(m);
    for (int i = 0; i < r; ++i) {
      double fixed = 0.5 * i + lam[i] * v.diag(i) * v.diag(i) / coeffs.b(i);
      worst_fixed = std::max(
          worst_fixed, std::abs(coeffs.b(i) - fixed) / std::max(1.0, fixed));
    }
  }
  return {make_result("mean_map_roundtrip", worst_round, 1e-10),
          make_result("psi_two_path_agreement", worst_paths, 1e-10),
          make_result("b_fixed_point", worst_fixed, 1e-12)};
}

std::vector<CheckResult> verify_domain_of_means(std::uint64_t seed,
                                                int cases) {
  RngStream rng(seed);
  int failures = 0;
  for (int t = 0; t < cases; ++t) {
    int r = 2 + t % 3;
    Eigen::MatrixXd theta = random_canonical(r, rng);
    Eigen::VectorXd lv(r);
    for (int i = 0; i < r; ++i) lv(i) = 0.2 + 3.0 * rng.uniform();
    try {
      MeanPoint m =
          mean_map(CanonicalParam(SymmetricMatrix(theta)), RateVector(lv));
      if (!is_spd(m.m.sym())) ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }
  return {make_result("domain_of_means_spd", static_cast<double>(failures),
                      0.0)};
}

}  // namespace rieszmix
