#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "exoflr/fourier.hpp"

namespace exoflr {

/// One i.i.d. sample of the model: regressor curves X_i, instrument curves
/// W_i and scalar responses Y_i. All curves share the grid order p.
struct Dataset {
  std::vector<SampledCurve> X;
  std::vector<SampledCurve> W;
  std::vector<double> Y;

  std::size_t n() const noexcept { return Y.size(); }
  int p() const noexcept { return X.empty() ? -1 : X.front().p(); }
};

/// Throws unless n >= 2, the three components have equal length and every
/// curve shares one grid order.
void validate(const Dataset& data);

/// Empirical eigenvalues of the covariance and cross-covariance operators in
/// the Fourier basis, together with the regularized frequency selection.
///
/// Per frequency k in [-K, K]:
///   x_hat_k      = (1/n) sum_i |<X_i, phi_k>|^2
///   w_hat_k      = (1/n) sum_i |<W_i, phi_k>|^2
///   c_hat_k      = (1/n) sum_i <phi_k, X_i> <W_i, phi_k>
///   lambda_hat_k = |c_hat_k|^2 / w_hat_k  if w_hat_k >= alpha, else 0
/// Moments are uncentered; sample means enter only through mu_x / mu_w.
struct SpectralEstimates {
  int K = 0;
  std::vector<double> x_hat;                // index k + K
  std::vector<double> w_hat;                // index k + K
  std::vector<std::complex<double>> c_hat;  // index k + K
  std::vector<double> lambda_hat;           // index k + K
  FourierCoeffs mu_x;                       // coefficients of the X sample mean
  FourierCoeffs mu_w;                       // coefficients of the W sample mean
  double alpha = 0.0;                       // regularization threshold
  double nu_sobolev = 0.0;                  // smoothness exponent in the cut-off rule
  std::vector<int> selected;                // K_hat_n, ascending
  std::uint64_t fingerprint = 0;

  double x(int k) const { return x_hat[static_cast<std::size_t>(k + K)]; }
  double w(int k) const { return w_hat[static_cast<std::size_t>(k + K)]; }
  std::complex<double> c(int k) const { return c_hat[static_cast<std::size_t>(k + K)]; }
  double lambda(int k) const { return lambda_hat[static_cast<std::size_t>(k + K)]; }
};

/// Sobolev weight gamma_k = 1 + |2 pi k|.
inline double sobolev_gamma(int k) noexcept {
  return 1.0 + 6.283185307179586476925286766559 * std::abs(k);
}

/// Computes SpectralEstimates from a dataset. K defaults to the Nyquist
/// bound floor(p/2) when negative. With center = true the per-sample
/// coefficients are mean-corrected before the moments are formed (mu_x and
/// mu_w always record the means of the raw rows); default is the plain
/// uncentered moments.
SpectralEstimates estimate(const Dataset& data, int K, double alpha, double nu_sobolev,
                           bool center = false);

/// Same computation starting from already-analyzed coefficient tables.
SpectralEstimates estimate_from_coeffs(const CoeffTable& xc, const CoeffTable& wc, double alpha,
                                       double nu_sobolev, bool center = false);

/// The regularized frequency set {k : lambda_hat_k >= alpha * gamma_k^nu}.
/// lambda_hat already carries the indicator of w_hat_k >= alpha, so this one
/// set realizes both indicators of the slope estimators.
std::vector<int> selection_set(const SpectralEstimates& est);

}  // namespace exoflr
