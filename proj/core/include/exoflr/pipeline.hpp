#pragma once

#include <vector>

#include "exoflr/estimators.hpp"
#include "exoflr/spectra.hpp"

namespace exoflr {

/// Everything the test statistics need from one pass over a dataset:
/// analyzed coefficient tables, spectral estimates, both slope fits, the
/// IV fitted values / residuals and the error-variance estimate. Bootstrap
/// replicates reuse this state unchanged (X and W never change).
struct ModelFit {
  CoeffTable xc;
  CoeffTable wc;
  std::vector<double> y;
  SpectralEstimates est;
  SlopeEstimate beta_iv;
  SlopeEstimate beta_ex;
  std::vector<double> fitted;     // Re <beta_iv, X_i>
  std::vector<double> residuals;  // y_i - fitted_i
  double sigma_sq = 0.0;
  double t_n = 0.0;               // test statistic on the original data
};

/// Runs analyze -> estimate -> fit both slopes -> residuals -> statistic.
/// K < 0 selects the Nyquist default floor(p/2).
ModelFit fit_model(const Dataset& data, int K, double alpha, double nu_sobolev);

}  // namespace exoflr
