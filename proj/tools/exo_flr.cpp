// exo-flr: exogeneity testing for the functional linear regression model.
//
// Subcommands:
//   test      run the asymptotic or a bootstrap exogeneity test on a dataset
//   simulate  draw a synthetic dataset and write it as CSV
//   sweep     run a Monte Carlo grid from a config file, emit result CSV
//
// Exit codes for `test`: 0 = H0 not rejected, 3 = H0 rejected, 1 = error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "exoflr/bootstrap.hpp"
#include "exoflr/dgp.hpp"
#include "exoflr/errors.hpp"
#include "exoflr/exogeneity_test.hpp"
#include "exoflr/io.hpp"
#include "exoflr/montecarlo.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitReject = 3;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int run_test(const std::string& data_path, double alpha, double nu, double gamma,
             bool asymptotic, const std::string& scheme_name, int B, std::uint64_t seed,
             int threads) {
  const exoflr::Dataset data = exoflr::read_dataset(data_path);

  bool reject = false;
  if (asymptotic) {
    const exoflr::TestOutcome out = exoflr::asymptotic_test(data, alpha, nu, gamma);
    std::cout << "test = asymptotic\n"
              << "n = " << data.n() << "\n"
              << "alpha = " << fmt(alpha) << "\n"
              << "nu_sobolev = " << fmt(nu) << "\n"
              << "gamma = " << fmt(gamma) << "\n"
              << "T_n = " << fmt(out.T_n) << "\n"
              << "t_hat_n = " << fmt(out.t_hat_n) << "\n"
              << "B_hat_n = " << fmt(out.B_hat_n) << "\n"
              << "R_hat_n = " << fmt(out.R_hat_n) << "\n"
              << "V_hat_n = " << fmt(out.V_hat_n) << "\n"
              << "z = " << fmt(out.z) << "\n"
              << "p_value = " << fmt(out.p_value) << "\n"
              << "reject = " << (out.reject ? "true" : "false") << "\n";
    reject = out.reject;
  } else {
    const exoflr::BootstrapScheme scheme = exoflr::scheme_from_string(scheme_name);
    const exoflr::BootstrapOutcome out =
        exoflr::bootstrap_test(data, alpha, nu, scheme, B, gamma, seed, -1, threads);
    std::cout << "test = bootstrap\n"
              << "scheme = " << exoflr::to_string(scheme) << "\n"
              << "n = " << data.n() << "\n"
              << "alpha = " << fmt(alpha) << "\n"
              << "nu_sobolev = " << fmt(nu) << "\n"
              << "gamma = " << fmt(gamma) << "\n"
              << "B = " << out.B << "\n"
              << "seed = " << out.seed << "\n"
              << "T_n = " << fmt(out.T_n) << "\n"
              << "q_star = " << fmt(out.q_star) << "\n"
              << "p_value = " << fmt(out.p_value) << "\n"
              << "reject = " << (out.reject ? "true" : "false") << "\n";
    reject = out.reject;
  }
  return reject ? kExitReject : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exogeneity tests for the functional linear regression model"};
  app.require_subcommand(1);

  // test
  std::string data_path;
  double alpha = 1e-4;
  double nu = 0.0;
  double gamma = 0.05;
  bool asymptotic = false;
  std::string scheme_name;
  int B = 500;
  std::uint64_t seed = 0;
  int threads = 0;

  CLI::App* test = app.add_subcommand("test", "Run an exogeneity test on a dataset CSV");
  test->add_option("--data", data_path, "dataset CSV file")->required();
  test->add_option("--alpha", alpha, "regularization threshold")->required();
  test->add_option("--nu", nu, "Sobolev exponent in the cut-off rule (default 0)");
  test->add_option("--gamma", gamma, "nominal level")->required();
  auto* flag_asym = test->add_flag("--asymptotic", asymptotic, "plug-in asymptotic test");
  auto* opt_boot =
      test->add_option("--bootstrap", scheme_name, "bootstrap test with the given scheme "
                                                   "(efron|mammen|rademacher|normal)");
  test->add_option("--B", B, "bootstrap replicates (default 500)");
  test->add_option("--seed", seed, "bootstrap seed (default 0)");
  test->add_option("--threads", threads, "worker threads, 0 = all cores");
  flag_asym->excludes(opt_boot);
  opt_boot->excludes(flag_asym);

  // simulate
  exoflr::DgpConfig cfg;
  std::string out_path;
  CLI::App* simulate = app.add_subcommand("simulate", "Draw a synthetic dataset, write CSV");
  simulate->add_option("--n", cfg.n, "sample size")->required();
  simulate->add_option("--p", cfg.p, "grid order (default 100)");
  simulate->add_option("--rho", cfg.rho, "endogeneity corr(Z1,U)")->required();
  simulate->add_option("--nu-instr", cfg.nu_instr, "instrument strength corr(Z1,Z2)")->required();
  simulate->add_option("--beta", cfg.beta_id, "slope function id 1|2|3")->required();
  simulate->add_option("--sigma", cfg.sigma, "error scale (default 1.4)");
  simulate->add_option("--bandwidth", cfg.h, "mollifier bandwidth for beta 3 (default 0.1)");
  simulate->add_option("--seed", cfg.seed, "rng seed")->required();
  simulate->add_option("--out", out_path, "output CSV path")->required();

  // sweep
  std::string config_path;
  std::string sweep_out;
  int sweep_threads = 0;
  CLI::App* sweep = app.add_subcommand("sweep", "Run a Monte Carlo sweep from a config file");
  sweep->add_option("--config", config_path, "sweep config file")->required();
  sweep->add_option("--out", sweep_out, "result CSV path")->required();
  sweep->add_option("--threads", sweep_threads, "worker threads, 0 = all cores");

  CLI11_PARSE(app, argc, argv);

  try {
    if (test->parsed()) {
      if (asymptotic == !scheme_name.empty()) {
        std::cerr << "error: choose exactly one of --asymptotic / --bootstrap SCHEME\n";
        return kExitError;
      }
      return run_test(data_path, alpha, nu, gamma, asymptotic, scheme_name, B, seed, threads);
    }
    if (simulate->parsed()) {
      exoflr::write_dataset(exoflr::sample_dataset(cfg), out_path);
      return kExitOk;
    }
    if (sweep->parsed()) {
      const auto cells = exoflr::parse_sweep_config(config_path);
      std::ofstream out(sweep_out);
      if (!out) {
        std::cerr << "error: cannot open '" << sweep_out << "' for writing\n";
        return kExitError;
      }
      exoflr::run_sweep(cells, out, sweep_threads);
      return kExitOk;
    }
  } catch (const exoflr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
