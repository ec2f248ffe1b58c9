#include "exoflr/spectra.hpp"

#include <cmath>
#include <cstring>

#include "exoflr/errors.hpp"

namespace exoflr {

namespace {

std::uint64_t fnv1a(std::uint64_t h, const void* bytes, std::size_t len) {
  const unsigned char* b = static_cast<const unsigned char*>(bytes);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= b[i];
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::uint64_t fingerprint_of(const SpectralEstimates& est, std::size_t n) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  const std::int64_t shape[2] = {est.K, static_cast<std::int64_t>(n)};
  h = fnv1a(h, shape, sizeof shape);
  const double pars[2] = {est.alpha, est.nu_sobolev};
  h = fnv1a(h, pars, sizeof pars);
  h = fnv1a(h, est.x_hat.data(), est.x_hat.size() * sizeof(double));
  h = fnv1a(h, est.w_hat.data(), est.w_hat.size() * sizeof(double));
  h = fnv1a(h, est.c_hat.data(), est.c_hat.size() * sizeof(std::complex<double>));
  return h;
}

}  // namespace

void validate(const Dataset& data) {
  if (data.n() < 2) fail(errc::TooFewSamples, "need at least two samples");
  if (data.X.size() != data.n() || data.W.size() != data.n()) {
    fail(errc::InvalidArgument, "X, W and Y must have equal length");
  }
  const int p = data.X.front().p();
  if (p < 1) fail(errc::InvalidCurve, "grid order must be positive");
  for (std::size_t i = 0; i < data.n(); ++i) {
    if (data.X[i].p() != p || data.W[i].p() != p) {
      fail(errc::InvalidCurve, "curves do not share a grid order");
    }
  }
}

SpectralEstimates estimate(const Dataset& data, int K, double alpha, double nu_sobolev,
                           bool center) {
  validate(data);
  if (K < 0) K = data.p() / 2;
  const CoeffTable xc = analyze_all(data.X, K);
  const CoeffTable wc = analyze_all(data.W, K);
  return estimate_from_coeffs(xc, wc, alpha, nu_sobolev, center);
}

SpectralEstimates estimate_from_coeffs(const CoeffTable& xc, const CoeffTable& wc, double alpha,
                                       double nu_sobolev, bool center) {
  if (xc.n < 2) fail(errc::TooFewSamples, "need at least two samples");
  if (!(alpha > 0.0)) fail(errc::InvalidRegularization, "alpha must be positive");
  if (nu_sobolev < 0.0) fail(errc::InvalidRegularization, "nu must be nonnegative");
  if (xc.K != wc.K || xc.n != wc.n) {
    fail(errc::TruncationMismatch, "X and W coefficient tables disagree in shape");
  }

  const int K = xc.K;
  const std::size_t n = xc.n;
  const std::size_t m = xc.stride();
  const double inv_n = 1.0 / static_cast<double>(n);

  SpectralEstimates est;
  est.K = K;
  est.alpha = alpha;
  est.nu_sobolev = nu_sobolev;
  est.x_hat.assign(m, 0.0);
  est.w_hat.assign(m, 0.0);
  est.c_hat.assign(m, {0.0, 0.0});
  est.lambda_hat.assign(m, 0.0);
  est.mu_x = FourierCoeffs(K);
  est.mu_w = FourierCoeffs(K);

  // Sample means first; needed up front when centering.
  std::vector<std::complex<double>> mx(m, {0.0, 0.0}), mw(m, {0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double>* xr = xc.row(i);
    const std::complex<double>* wr = wc.row(i);
    for (std::size_t j = 0; j < m; ++j) {
      mx[j] += xr[j];
      mw[j] += wr[j];
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    mx[j] *= inv_n;
    mw[j] *= inv_n;
    est.mu_x.at(static_cast<int>(j) - K) = mx[j];
    est.mu_w.at(static_cast<int>(j) - K) = mw[j];
  }

  // Explicit real arithmetic so that W = X yields c_hat identical to x_hat
  // bit for bit; the studentization ratio then degenerates to exactly 1.
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double>* xrow = xc.row(i);
    const std::complex<double>* wrow = wc.row(i);
    for (std::size_t j = 0; j < m; ++j) {
      const std::complex<double> xv = center ? xrow[j] - mx[j] : xrow[j];
      const std::complex<double> wv = center ? wrow[j] - mw[j] : wrow[j];
      const double xre = xv.real(), xim = xv.imag();
      const double wre = wv.real(), wim = wv.imag();
      est.x_hat[j] += xre * xre + xim * xim;
      est.w_hat[j] += wre * wre + wim * wim;
      // conj(x) * w, componentwise
      est.c_hat[j] += std::complex<double>(xre * wre + xim * wim, xre * wim - xim * wre);
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    est.x_hat[j] *= inv_n;
    est.w_hat[j] *= inv_n;
    est.c_hat[j] *= inv_n;
    if (est.w_hat[j] >= alpha) {
      const double c2 = est.c_hat[j].real() * est.c_hat[j].real() +
                        est.c_hat[j].imag() * est.c_hat[j].imag();
      est.lambda_hat[j] = c2 / est.w_hat[j];
    }
  }

  est.selected = selection_set(est);
  est.fingerprint = fingerprint_of(est, n);
  return est;
}

std::vector<int> selection_set(const SpectralEstimates& est) {
  std::vector<int> sel;
  for (int k = -est.K; k <= est.K; ++k) {
    if (est.lambda(k) >= est.alpha * std::pow(sobolev_gamma(k), est.nu_sobolev)) {
      sel.push_back(k);
    }
  }
  return sel;
}

}  // namespace exoflr
