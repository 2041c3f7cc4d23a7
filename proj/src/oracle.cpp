#include "rieszmix/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

namespace rieszmix {

std::string McReport::to_json() const {
  nlohmann::json j{{"check", check},       {"estimate", estimate},
                   {"closed_form", closed_form}, {"std_error", std_error},
                   {"z_score", z_score},   {"n", n},
                   {"seed", seed},         {"pass", pass}};
  return j.dump();
}

Eigen::MatrixXd fd_gradient(const ScalarField& f, const Eigen::MatrixXd& at,
                            double step) {
  const int r = static_cast<int>(at.rows());
  auto basis = sym_basis(r);
  Eigen::VectorXd coords(sym_dim(r));
  for (int k = 0; k < sym_dim(r); ++k) {
    double up = f(at + step * basis[k]);
    double down = f(at - step * basis[k]);
    coords(k) = (up - down) / (2.0 * step);
  }
  return sym_from_coords(r, coords);
}

SymOperator fd_hessian(const ScalarField& f, const Eigen::MatrixXd& at,
                       double step) {
  const int r = static_cast<int>(at.rows());
  auto basis = sym_basis(r);
  const int n = sym_dim(r);
  Eigen::MatrixXd h(n, n);
  const double f0 = f(at);
  for (int k = 0; k < n; ++k) {
    h(k, k) = (f(at + 2.0 * step * basis[k]) - 2.0 * f0 +
               f(at - 2.0 * step * basis[k])) /
              (4.0 * step * step);
    for (int l = k + 1; l < n; ++l) {
      double v = (f(at + step * (basis[k] + basis[l])) -
                  f(at + step * (basis[k] - basis[l])) -
                  f(at - step * (basis[k] - basis[l])) +
                  f(at - step * (basis[k] + basis[l]))) /
                 (4.0 * step * step);
      h(k, l) = h(l, k) = v;
    }
  }
  return SymOperator(r, 0.5 * (h + h.transpose()));
}

McReport mc_laplace_check(const MatrixSampler& sampler, double log_laplace,
                          const Eigen::MatrixXd& theta, long n,
                          std::uint64_t seed, int workers,
                          double z_threshold) {
  if (n < 1) throw DomainError("mc_laplace_check: n must be >= 1");
  if (workers < 1) workers = 1;

  struct Partial {
    double sum = 0.0;
    double sum_sq = 0.0;
    long count = 0;
  };
  std::vector<Partial> partials(workers);
  const long base = n / workers;
  const long extra = n % workers;

  auto run_worker = [&](int w) {
    RngStream rng(seed, static_cast<std::uint64_t>(w));
    long count = base + (w < extra ? 1 : 0);
    Partial p;
    for (long j = 0; j < count; ++j) {
      Eigen::MatrixXd x = sampler(rng);
      double v = std::exp((theta.array() * x.array()).sum());  // <theta,x>
      p.sum += v;
      p.sum_sq += v * v;
      p.count = j + 1;
    }
    partials[w] = p;
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
    for (auto& t : pool) t.join();
  }

  double sum = 0.0, sum_sq = 0.0;
  for (const auto& p : partials) {
    sum += p.sum;
    sum_sq += p.sum_sq;
  }
  McReport rep;
  rep.n = n;
  rep.seed = seed;
  rep.estimate = sum / n;
  rep.closed_form = std::exp(log_laplace);
  double var = std::max(0.0, sum_sq / n - rep.estimate * rep.estimate);
  rep.std_error = std::sqrt(var / n);
  rep.z_score = rep.std_error > 0.0
                    ? (rep.estimate - rep.closed_form) / rep.std_error
                    : (rep.estimate == rep.closed_form ? 0.0
                                                       : std::numeric_limits<double>::infinity());
  rep.pass = std::abs(rep.z_score) <= z_threshold;
  return rep;
}

namespace {

// Adaptive Simpson bisection, absolute tolerance per panel.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double fa, double b, double fb, double fm,
                        double whole, double tol, int depth) {
  if (depth > 60)
    throw ConvergenceError("normalization_check_r1: refinement budget exceeded");
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(f, a, fa, m, fm, flm, left, 0.5 * tol, depth + 1) +
         adaptive_simpson(f, m, fm, b, fb, frm, right, 0.5 * tol, depth + 1);
}

}  // namespace

double normalization_check_r1(const RateVector& lam, double x_max) {
  if (lam.size() != 1)
    throw DimensionMismatch("normalization_check_r1: r must be 1");
  if (!lam.all_positive())
    throw DomainError("normalization_check_r1: lambda must be > 0");
  const double lambda = lam[0];
  auto density = [&](double x) {
    if (x <= 0.0) return lambda * std::exp(-lambda);  // continuous limit at 0
    Eigen::MatrixXd xm(1, 1);
    xm(0, 0) = x;
    return std::exp(mixture_log_density(SpdPoint(xm), lam));
  };
  double fa = density(0.0), fb = density(x_max), fm = density(0.5 * x_max);
  double whole = x_max / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(density, 0.0, fa, x_max, fb, fm, whole, 1e-9, 0);
}

int default_workers(int fallback) {
  if (const char* env = std::getenv("RIESZ_MIX_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return fallback;
}

}  // namespace rieszmix
