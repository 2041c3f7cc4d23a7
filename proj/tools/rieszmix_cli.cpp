// Batch front end: densities, samplers, NEF quantities, and the
// verification suites, all through JSON on stdout.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rieszmix/nef.hpp"
#include "rieszmix/oracle.hpp"
#include "rieszmix/symcone.hpp"
#include "rieszmix/verify.hpp"

namespace {

using nlohmann::json;
using namespace rieszmix;

Eigen::MatrixXd load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j = json::parse(in);
  int r = j.at("r").get<int>();
  auto data = j.at("data").get<std::vector<std::vector<double>>>();
  if (static_cast<int>(data.size()) != r)
    throw std::runtime_error(path + ": data has wrong row count");
  Eigen::MatrixXd m(r, r);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(data[i].size()) != r)
      throw std::runtime_error(path + ": data has wrong column count");
    for (int k = 0; k < r; ++k) m(i, k) = data[i][k];
  }
  return m;
}

json matrix_json(const Eigen::MatrixXd& m) {
  const int r = static_cast<int>(m.rows());
  std::vector<std::vector<double>> data(r, std::vector<double>(r));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) data[i][k] = m(i, k);
  return json{{"r", r}, {"data", data}};
}

RateVector rates(const std::vector<double>& v, int expect_r = -1) {
  if (expect_r >= 0 && static_cast<int>(v.size()) != expect_r)
    throw std::runtime_error("lambda length does not match matrix order");
  return RateVector(Eigen::Map<const Eigen::VectorXd>(
      v.data(), static_cast<Eigen::Index>(v.size())));
}

ShapeVector shape(const std::vector<double>& v) {
  return ShapeVector(Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(
      v.data(), static_cast<Eigen::Index>(v.size()))));
}

int run_verify(const std::string& suite, int r, std::uint64_t seed, long n) {
  int workers = default_workers();
  std::vector<CheckResult> results;
  auto append = [&results](std::vector<CheckResult> v) {
    for (auto& c : v) results.push_back(std::move(c));
  };
  bool all = suite == "all";
  (void)r;
  if (all || suite == "prop1") append(verify_prop1());
  if (all || suite == "identities") append(verify_identities(seed));
  if (all || suite == "laplace") append(verify_laplace(seed, n, workers));
  if (all || suite == "gradient") append(verify_gradient(seed));
  if (all || suite == "hessian") append(verify_hessian(seed));
  if (all || suite == "normalize") append(verify_normalize());
  if (all) {
    append(verify_series(seed));
    append(verify_scalar_variance());
    append(verify_inversion(seed));
    append(verify_domain_of_means(seed));
  }
  if (results.empty()) throw std::runtime_error("unknown suite: " + suite);

  json out = json::array();
  bool ok = true;
  for (const auto& c : results) {
    out.push_back(json::parse(c.to_json()));
    ok = ok && c.pass;
    std::cerr << (c.pass ? "pass " : "FAIL ") << c.check
              << " observed=" << c.observed << " tol=" << c.tolerance << "\n";
  }
  std::cout << out.dump() << std::endl;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riesz-Poisson mixture toolkit"};
  app.require_subcommand(1);

  std::vector<double> lambda, s_vec;
  std::string x_file, sigma_file, theta_file, mean_file, out_file;
  std::string model, suite = "all";
  bool log_flag = false;
  long n = 1;
  std::uint64_t seed = 0;
  int r_opt = 2;

  auto* density = app.add_subcommand("density", "mixture (log-)density at x");
  density->add_option("--lambda", lambda, "Poisson rates")
      ->delimiter(',')->required();
  density->add_option("--x", x_file, "matrix JSON file")->required();
  density->add_flag("--log", log_flag, "emit the log-density");

  auto* rdensity =
      app.add_subcommand("riesz-density", "Riesz log-density at x");
  rdensity->add_option("--s", s_vec, "shape vector")->delimiter(',')->required();
  rdensity->add_option("--sigma", sigma_file, "matrix JSON file")->required();
  rdensity->add_option("--x", x_file, "matrix JSON file")->required();

  auto* sample = app.add_subcommand("sample", "draw samples as JSON lines");
  sample->add_option("--model", model, "riesz|poisson|mixture")->required();
  sample->add_option("--lambda", lambda, "rates (poisson, mixture)")
      ->delimiter(',');
  sample->add_option("--s", s_vec, "shape vector (riesz)")->delimiter(',');
  sample->add_option("--n", n, "number of draws")->required();
  sample->add_option("--seed", seed, "seed")->required();
  sample->add_option("--out", out_file, "output .jsonl path")->required();

  auto* mean = app.add_subcommand("mean", "mean map k'_mu(theta)");
  mean->add_option("--lambda", lambda)->delimiter(',')->required();
  mean->add_option("--theta", theta_file)->required();

  auto* theta_cmd = app.add_subcommand("theta", "inverse mean map psi_mu(m)");
  theta_cmd->add_option("--lambda", lambda)->delimiter(',')->required();
  theta_cmd->add_option("--mean", mean_file)->required();

  auto* variance = app.add_subcommand("variance", "variance function V_F(m)");
  variance->add_option("--lambda", lambda)->delimiter(',')->required();
  variance->add_option("--mean", mean_file)->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite,
                     "prop1|identities|laplace|gradient|hessian|normalize|all");
  verify->add_option("--r", r_opt, "matrix order hint");
  verify->add_option("--seed", seed, "seed");
  verify->add_option("--n", n, "Monte Carlo sample count")->default_val(1000000);

  CLI11_PARSE(app, argc, argv);

  try {
    if (density->parsed()) {
      Eigen::MatrixXd x = load_matrix(x_file);
      double ld = mixture_log_density(SpdPoint(x),
                                      rates(lambda, static_cast<int>(x.rows())));
      json out = log_flag ? json{{"log_density", ld}}
                          : json{{"density", std::exp(ld)}};
      std::cout << out.dump() << std::endl;
    } else if (rdensity->parsed()) {
      Eigen::MatrixXd x = load_matrix(x_file);
      Eigen::MatrixXd sigma = load_matrix(sigma_file);
      RieszParams p{shape(s_vec), SpdPoint(sigma)};
      double ld = riesz_log_density(SpdPoint(x), p);
      std::cout << json{{"log_density", ld}}.dump() << std::endl;
    } else if (sample->parsed()) {
      std::ofstream out(out_file);
      if (!out) throw std::runtime_error("cannot open " + out_file);
      RngStream rng(seed);
      for (long i = 0; i < n; ++i) {
        if (model == "riesz") {
          out << matrix_json(sample_riesz(shape(s_vec), rng).mat()).dump()
              << "\n";
        } else if (model == "poisson") {
          out << json{{"k", sample_poisson(rates(lambda), rng)}}.dump() << "\n";
        } else if (model == "mixture") {
          out << matrix_json(sample_mixture(rates(lambda), rng).mat()).dump()
              << "\n";
        } else {
          throw std::runtime_error("unknown model: " + model);
        }
      }
    } else if (mean->parsed()) {
      Eigen::MatrixXd th = load_matrix(theta_file);
      MeanPoint m = mean_map(CanonicalParam(SymmetricMatrix(th)),
                             rates(lambda, static_cast<int>(th.rows())));
      std::cout << matrix_json(m.m.mat()).dump() << std::endl;
    } else if (theta_cmd->parsed()) {
      Eigen::MatrixXd m = load_matrix(mean_file);
      CanonicalParam th = inverse_mean_map(
          MeanPoint{SpdPoint(m)}, rates(lambda, static_cast<int>(m.rows())));
      std::cout << matrix_json(th.theta().mat()).dump() << std::endl;
    } else if (variance->parsed()) {
      Eigen::MatrixXd m = load_matrix(mean_file);
      SymOperator v = variance_function(
          MeanPoint{SpdPoint(m)}, rates(lambda, static_cast<int>(m.rows())));
      json out{{"n", v.dim()}, {"data", json::array()}};
      for (int i = 0; i < v.dim(); ++i) {
        json row = json::array();
        for (int k = 0; k < v.dim(); ++k) row.push_back(v.mat()(i, k));
        out["data"].push_back(row);
      }
      std::cout << out.dump() << std::endl;
    } else if (verify->parsed()) {
      return run_verify(suite, r_opt, seed, n);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 0;
}
