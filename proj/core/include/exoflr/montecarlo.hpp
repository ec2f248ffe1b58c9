#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "exoflr/bootstrap.hpp"
#include "exoflr/dgp.hpp"

namespace exoflr {

/// Which test a sweep cell runs.
struct TestSpec {
  enum class Kind { Asymptotic, Bootstrap } kind = Kind::Bootstrap;
  BootstrapScheme scheme = BootstrapScheme::WildRademacher;
  int B = 300;
};

/// One Monte Carlo experiment: a data-generating configuration, a test, and
/// the repetition budget. The cell seed alone determines every random draw;
/// repetition r uses the substreams (seed, r, 0) for data and (seed, r, 1)
/// for the bootstrap.
struct SweepCell {
  DgpConfig dgp;
  TestSpec test;
  double alpha = 1e-4;
  double nu_sobolev = 0.0;
  double gamma = 0.05;
  int reps = 300;
  std::uint64_t seed = 0;
};

/// Rejection-rate estimate for one cell. Repetitions aborted by a degenerate
/// pipeline (DegenerateStudentization, NoSelectedFrequencies) count as
/// failures and are excluded from the rate denominator.
struct CellResult {
  double rejection_rate = 0.0;
  double se = 0.0;  // binomial standard error sqrt(r (1-r) / reps_done)
  int reps_done = 0;
  int failures = 0;
  double wall_ms = 0.0;
};

/// Runs all repetitions of one cell (parallel across repetitions;
/// threads = 0 means hardware concurrency). Deterministic given the cell.
/// Throws CellFailed when every repetition aborted.
CellResult run_cell(const SweepCell& cell, int threads = 0);

/// Runs each cell in order and writes one CSV row per cell (header first)
/// with the columns
/// beta_id,n,p,alpha,nu_sobolev,rho,nu_instr,gamma,test,scheme,B,reps,
/// rejection_rate,se,failures,seed,wall_ms.
std::vector<CellResult> run_sweep(std::span<const SweepCell> cells, std::ostream& csv,
                                  int threads = 0);

/// The CSV row emitted by run_sweep for one finished cell.
std::string result_csv_header();
std::string result_csv_row(const SweepCell& cell, const CellResult& result);

}  // namespace exoflr
