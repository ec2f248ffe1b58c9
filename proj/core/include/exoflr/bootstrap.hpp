#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "exoflr/pipeline.hpp"
#include "exoflr/rng.hpp"
#include "exoflr/spectra.hpp"

namespace exoflr {

/// Residual-resampling schemes: Efron draws with replacement from the
/// mean-centered residuals; the wild variants multiply each residual by an
/// i.i.d. mean-zero unit-variance multiplier.
enum class BootstrapScheme { Efron, WildMammen, WildRademacher, WildNormal };

const char* to_string(BootstrapScheme scheme) noexcept;

/// Parses "efron", "mammen", "rademacher" or "normal".
BootstrapScheme scheme_from_string(const std::string& name);

struct BootstrapOutcome {
  double T_n = 0.0;
  std::vector<double> replicates;  // T_n^{*,b}, b = 0..B-1, in replicate order
  double q_star = 0.0;             // empirical (1-gamma)-quantile of the replicates
  double p_value = 1.0;            // (1 + #{T* >= T_n}) / (B + 1)
  bool reject = false;             // T_n > q_star
  int B = 0;
  double gamma = 0.0;
  std::uint64_t seed = 0;
};

/// One draw of the wild multiplier V:
///   Mammen:     -(sqrt5-1)/2 w.p. (sqrt5+1)/(2 sqrt5), (sqrt5+1)/2 otherwise
///   Rademacher: +-1 each w.p. 1/2
///   Normal:     standard normal
/// All laws have E[V] = 0 and E[V^2] = 1 exactly. Consumes exactly one
/// 64-bit draw. Efron is not a multiplier scheme (NotAMultiplierScheme).
double sample_multiplier(BootstrapScheme scheme, Rng& rng);

/// Bootstrap errors from the residuals alone: Efron resamples the
/// mean-centered residuals with replacement, wild schemes return V_i * r_i.
/// Never sees X or W, which is what makes the bootstrap sample exogenous by
/// construction.
std::vector<double> gen_errors(std::span<const double> residuals, BootstrapScheme scheme,
                               Rng& rng);

/// One bootstrap statistic: regenerates Y*_i = fitted_i + errors_star_i,
/// refits both slopes against the cached spectral estimates (X and W are
/// unchanged, so x_hat, w_hat, c_hat, lambda_hat and the selection are
/// identical) and returns T_n*.
double replicate(const ModelFit& fit, std::span<const double> errors_star);
double replicate(const Dataset& data, const SpectralEstimates& est, const SlopeEstimate& beta_iv,
                 std::span<const double> errors_star);

/// Full bootstrap test: one original-data fit, B replicates on independent
/// substreams of `seed`, then the quantile decision rule. Deterministic for
/// fixed (inputs, seed) at any thread count. K < 0 means floor(p/2);
/// threads = 0 means hardware concurrency.
BootstrapOutcome bootstrap_test(const Dataset& data, double alpha, double nu_sobolev,
                                BootstrapScheme scheme, int B, double gamma, std::uint64_t seed,
                                int K = -1, int threads = 0);

/// The decision rule's quantile index: floor(B (1-gamma)) into the sorted
/// replicate vector (0-based).
std::size_t quantile_index(int B, double gamma);

}  // namespace exoflr
