#include "exoflr/montecarlo.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "exoflr/errors.hpp"
#include "exoflr/exogeneity_test.hpp"
#include "exoflr/parallel.hpp"

namespace exoflr {

namespace {

enum class RepOutcome : signed char { Keep = 0, Reject = 1, Failed = -1 };

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

CellResult run_cell(const SweepCell& cell, int threads) {
  if (cell.reps < 1) fail(errc::InvalidArgument, "reps must be at least 1");
  if (!(cell.gamma > 0.0 && cell.gamma < 1.0)) fail(errc::InvalidArgument, "gamma not in (0,1)");
  validate(cell.dgp);

  const auto start = std::chrono::steady_clock::now();

  std::vector<RepOutcome> slots(static_cast<std::size_t>(cell.reps), RepOutcome::Keep);
  parallel_for(static_cast<std::size_t>(cell.reps), threads, [&](std::size_t rep) {
    DgpConfig cfg = cell.dgp;
    cfg.seed = substream(cell.seed, rep, 0);
    const Dataset data = sample_dataset(cfg);
    try {
      bool reject = false;
      if (cell.test.kind == TestSpec::Kind::Asymptotic) {
        reject = asymptotic_test(data, cell.alpha, cell.nu_sobolev, cell.gamma).reject;
      } else {
        reject = bootstrap_test(data, cell.alpha, cell.nu_sobolev, cell.test.scheme, cell.test.B,
                                cell.gamma, substream(cell.seed, rep, 1), /*K=*/-1,
                                /*threads=*/1)
                     .reject;
      }
      slots[rep] = reject ? RepOutcome::Reject : RepOutcome::Keep;
    } catch (const Error& e) {
      if (e.code() == errc::DegenerateStudentization || e.code() == errc::NoSelectedFrequencies) {
        slots[rep] = RepOutcome::Failed;
      } else {
        throw;
      }
    }
  });

  CellResult result;
  int rejections = 0;
  for (RepOutcome s : slots) {
    if (s == RepOutcome::Failed) {
      ++result.failures;
    } else {
      ++result.reps_done;
      if (s == RepOutcome::Reject) ++rejections;
    }
  }
  if (result.reps_done == 0) fail(errc::CellFailed, "every repetition aborted");

  result.rejection_rate = static_cast<double>(rejections) / static_cast<double>(result.reps_done);
  result.se = std::sqrt(result.rejection_rate * (1.0 - result.rejection_rate) /
                        static_cast<double>(result.reps_done));
  result.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             start)
                       .count();
  return result;
}

std::string result_csv_header() {
  return "beta_id,n,p,alpha,nu_sobolev,rho,nu_instr,gamma,test,scheme,B,reps,"
         "rejection_rate,se,failures,seed,wall_ms";
}

std::string result_csv_row(const SweepCell& cell, const CellResult& result) {
  const bool boot = cell.test.kind == TestSpec::Kind::Bootstrap;
  std::string row;
  row += std::to_string(cell.dgp.beta_id);
  row += ',' + std::to_string(cell.dgp.n);
  row += ',' + std::to_string(cell.dgp.p);
  row += ',' + fmt(cell.alpha);
  row += ',' + fmt(cell.nu_sobolev);
  row += ',' + fmt(cell.dgp.rho);
  row += ',' + fmt(cell.dgp.nu_instr);
  row += ',' + fmt(cell.gamma);
  row += ',';
  row += boot ? "bootstrap" : "asymptotic";
  row += ',';
  row += boot ? to_string(cell.test.scheme) : "-";
  row += ',' + std::to_string(boot ? cell.test.B : 0);
  row += ',' + std::to_string(cell.reps);
  row += ',' + fmt(result.rejection_rate);
  row += ',' + fmt(result.se);
  row += ',' + std::to_string(result.failures);
  row += ',' + std::to_string(cell.seed);
  row += ',' + std::to_string(static_cast<long long>(std::llround(result.wall_ms)));
  return row;
}

std::vector<CellResult> run_sweep(std::span<const SweepCell> cells, std::ostream& csv,
                                  int threads) {
  if (cells.empty()) fail(errc::InvalidArgument, "empty sweep grid");
  csv << result_csv_header() << '\n';
  std::vector<CellResult> results;
  results.reserve(cells.size());
  for (const SweepCell& cell : cells) {
    results.push_back(run_cell(cell, threads));
    csv << result_csv_row(cell, results.back()) << '\n';
    csv.flush();
    if (!csv) fail(errc::IoError, "result sink became unwritable");
  }
  return results;
}

}  // namespace exoflr
