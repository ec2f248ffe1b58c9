#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "exoflr/fourier.hpp"
#include "exoflr/spectra.hpp"

namespace exoflr {

enum class SlopeKind { Exogenous, InstrumentalVariable, Weighted };

const char* to_string(SlopeKind kind) noexcept;

/// A slope-function estimate in coefficient form, supported on the selected
/// frequency set of the SpectralEstimates it was fitted against.
struct SlopeEstimate {
  FourierCoeffs coeffs;
  SlopeKind kind = SlopeKind::Exogenous;
  std::uint64_t spectra_fingerprint = 0;
};

/// Pluggable regularization weight applied multiplicatively to the raw
/// per-frequency numerators; weight(x_hat_k, lambda_hat_k, k) must be finite
/// and nonnegative on the selected set. The spectral cut-off estimators are
/// the special cases weight = 1/x_hat_k (exogenous target) and
/// weight = 1/lambda_hat_k (instrumental target).
struct RegularizationWeights {
  std::function<double(double x_k, double lambda_k, int k)> weight;
};

/// Spectral cut-off estimator under exogeneity:
///   coeff(k) = [(1/n) sum_i <X_i, phi_k> Y_i] / x_hat_k   on K_hat_n.
SlopeEstimate fit_exogenous(const Dataset& data, const SpectralEstimates& est);
SlopeEstimate fit_exogenous(const CoeffTable& xc, std::span<const double> y,
                            const SpectralEstimates& est);

/// Instrumental-variable estimator:
///   coeff(k) = [(1/n) sum_i <W_i, phi_k> Y_i] / c_hat_k   on K_hat_n.
SlopeEstimate fit_iv(const Dataset& data, const SpectralEstimates& est);
SlopeEstimate fit_iv(const CoeffTable& wc, std::span<const double> y,
                     const SpectralEstimates& est);

/// Generalized estimator: the raw numerator of the chosen target multiplied
/// by w(x_hat_k, lambda_hat_k, k) on the selected set. For the instrumental
/// target the numerator is the optimal-instrument form
/// g_hat_k = conj(c_hat_k)/w_hat_k * (1/n) sum_i <W_i, phi_k> Y_i, so the
/// cut-off weights above reproduce fit_exogenous / fit_iv.
SlopeEstimate fit_weighted(const Dataset& data, const SpectralEstimates& est,
                           const RegularizationWeights& w, SlopeKind target);
SlopeEstimate fit_weighted(const CoeffTable& xc, const CoeffTable& wc, std::span<const double> y,
                           const SpectralEstimates& est, const RegularizationWeights& w,
                           SlopeKind target);

/// Residuals r_i = Y_i - Re <slope, X_i>, inner products in coefficient
/// space. The imaginary residue of the fitted value is pure rounding and is
/// checked to stay below 1e-8.
std::vector<double> residuals(const Dataset& data, const SlopeEstimate& slope);
std::vector<double> residuals(const CoeffTable& xc, std::span<const double> y,
                              const SlopeEstimate& slope);

/// Error-variance estimator (1/n) sum_i r_i^2 from the IV residuals.
double sigma_hat_sq(const Dataset& data, const SlopeEstimate& slope_iv);
double sigma_hat_sq(const CoeffTable& xc, std::span<const double> y,
                    const SlopeEstimate& slope_iv);

}  // namespace exoflr
