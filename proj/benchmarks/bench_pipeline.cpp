#include <benchmark/benchmark.h>

#include "exoflr/bootstrap.hpp"
#include "exoflr/dgp.hpp"
#include "exoflr/montecarlo.hpp"
#include "exoflr/normal.hpp"
#include "exoflr/pipeline.hpp"

namespace {

exoflr::Dataset bench_dataset(std::size_t n) {
  exoflr::DgpConfig cfg;
  cfg.n = n;
  cfg.p = 100;
  cfg.rho = 0.4;
  cfg.nu_instr = 0.6;
  cfg.beta_id = 1;
  cfg.seed = 31337;
  return exoflr::sample_dataset(cfg);
}

void BM_NormalQuantile(benchmark::State& state) {
  double p = 0.0001;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exoflr::normal_quantile(p));
    p += 1e-9;
  }
}
BENCHMARK(BM_NormalQuantile);

void BM_AnalyzeAll(benchmark::State& state) {
  const auto data = bench_dataset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exoflr::analyze_all(data.X, 50));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AnalyzeAll)->Arg(100)->Arg(300);

void BM_FitModel(benchmark::State& state) {
  const auto data = bench_dataset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exoflr::fit_model(data, -1, 1e-4, 3.0));
  }
}
BENCHMARK(BM_FitModel)->Arg(100)->Arg(300);

void BM_BootstrapReplicate(benchmark::State& state) {
  const auto data = bench_dataset(100);
  const exoflr::ModelFit fit = exoflr::fit_model(data, -1, 1e-4, 3.0);
  exoflr::Rng rng(7);
  const auto errors =
      exoflr::gen_errors(fit.residuals, exoflr::BootstrapScheme::WildRademacher, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exoflr::replicate(fit, errors));
  }
}
BENCHMARK(BM_BootstrapReplicate);

void BM_BootstrapTest(benchmark::State& state) {
  const auto data = bench_dataset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exoflr::bootstrap_test(
        data, 1e-4, 3.0, exoflr::BootstrapScheme::WildRademacher, 300, 0.05, 11, -1, 1));
  }
}
BENCHMARK(BM_BootstrapTest)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_RunCell(benchmark::State& state) {
  exoflr::SweepCell cell;
  cell.dgp.n = 100;
  cell.dgp.p = 100;
  cell.dgp.rho = 0.4;
  cell.dgp.nu_instr = 0.6;
  cell.dgp.beta_id = 1;
  cell.test.kind = exoflr::TestSpec::Kind::Bootstrap;
  cell.test.scheme = exoflr::BootstrapScheme::WildRademacher;
  cell.test.B = 100;
  cell.alpha = 1e-4;
  cell.nu_sobolev = 3.0;
  cell.reps = 50;
  cell.seed = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exoflr::run_cell(cell, 0));
  }
}
BENCHMARK(BM_RunCell)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
