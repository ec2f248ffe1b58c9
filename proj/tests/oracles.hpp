// Brute-force reference implementations used as test oracles. Everything in
// here is written as literal double loops over the defining sums, independent
// of the library's computation paths (twiddle tables, compacted workspaces,
// shared numerator code), so agreement is evidence and not tautology.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "exoflr/estimators.hpp"
#include "exoflr/fourier.hpp"
#include "exoflr/spectra.hpp"

namespace oracles {

using cplx = std::complex<double>;

// <f, phi_k> by direct summation with per-term std::polar.
inline cplx dft_direct(const exoflr::SampledCurve& curve, int k) {
  const int N = curve.p() + 1;
  cplx acc{0.0, 0.0};
  for (int l = 0; l < N; ++l) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) *
                         static_cast<double>(l) / static_cast<double>(N);
    acc += curve.values[static_cast<std::size_t>(l)] * std::polar(1.0, angle);
  }
  return acc / static_cast<double>(N);
}

inline exoflr::FourierCoeffs analyze_direct(const exoflr::SampledCurve& curve, int K) {
  exoflr::FourierCoeffs out(K);
  for (int k = -K; k <= K; ++k) out.at(k) = dft_direct(curve, k);
  return out;
}

// Grid Riemann sum (1/(p+1)) sum f(t_l) g(t_l).
inline double riemann_inner(const exoflr::SampledCurve& f, const exoflr::SampledCurve& g) {
  double acc = 0.0;
  for (std::size_t l = 0; l < f.values.size(); ++l) acc += f.values[l] * g.values[l];
  return acc / static_cast<double>(f.values.size());
}

struct BruteSpectra {
  std::vector<double> x, w, lambda;  // index k+K
  std::vector<cplx> c;
  std::vector<int> selected;
  int K = 0;
  double x_at(int k) const { return x[static_cast<std::size_t>(k + K)]; }
  double w_at(int k) const { return w[static_cast<std::size_t>(k + K)]; }
  cplx c_at(int k) const { return c[static_cast<std::size_t>(k + K)]; }
  double lambda_at(int k) const { return lambda[static_cast<std::size_t>(k + K)]; }
};

// Transcription of the eigenvalue estimators and the selection rule.
inline BruteSpectra spectra_direct(const exoflr::Dataset& data, int K, double alpha, double nu) {
  BruteSpectra out;
  out.K = K;
  const std::size_t m = 2 * static_cast<std::size_t>(K) + 1;
  out.x.assign(m, 0.0);
  out.w.assign(m, 0.0);
  out.c.assign(m, {0.0, 0.0});
  out.lambda.assign(m, 0.0);
  const double n = static_cast<double>(data.n());
  for (int k = -K; k <= K; ++k) {
    const std::size_t j = static_cast<std::size_t>(k + K);
    for (std::size_t i = 0; i < data.n(); ++i) {
      const cplx xk = dft_direct(data.X[i], k);
      const cplx wk = dft_direct(data.W[i], k);
      out.x[j] += std::norm(xk) / n;
      out.w[j] += std::norm(wk) / n;
      out.c[j] += std::conj(xk) * wk / n;  // <phi_k, X_i><W_i, phi_k>
    }
    if (out.w[j] >= alpha) out.lambda[j] = std::norm(out.c[j]) / out.w[j];
    const double gamma_k = 1.0 + 2.0 * std::numbers::pi * std::abs(k);
    if (out.lambda[j] >= alpha * std::pow(gamma_k, nu)) out.selected.push_back(k);
  }
  return out;
}

// Transcription of the exogenous spectral cut-off estimator.
inline exoflr::FourierCoeffs fit_exogenous_direct(const exoflr::Dataset& data,
                                                  const BruteSpectra& sp) {
  exoflr::FourierCoeffs out(sp.K);
  for (int k : sp.selected) {
    cplx num{0.0, 0.0};
    for (std::size_t i = 0; i < data.n(); ++i) num += dft_direct(data.X[i], k) * data.Y[i];
    num /= static_cast<double>(data.n());
    out.at(k) = num / sp.x_at(k);
  }
  return out;
}

// Transcription of the IV estimator (explicit form).
inline exoflr::FourierCoeffs fit_iv_direct(const exoflr::Dataset& data, const BruteSpectra& sp) {
  exoflr::FourierCoeffs out(sp.K);
  for (int k : sp.selected) {
    cplx num{0.0, 0.0};
    for (std::size_t i = 0; i < data.n(); ++i) num += dft_direct(data.W[i], k) * data.Y[i];
    num /= static_cast<double>(data.n());
    out.at(k) = num / sp.c_at(k);
  }
  return out;
}

// Quadratic-form route: <delta, Gamma_{X,n} delta> through the full empirical
// matrix M_{kl} = (1/n) sum_i <X_i, phi_k> conj(<X_i, phi_l>).
inline double statistic_quadform_direct(const exoflr::Dataset& data,
                                        const exoflr::FourierCoeffs& beta_iv,
                                        const exoflr::FourierCoeffs& beta_ex) {
  const int K = beta_iv.truncation();
  const std::size_t m = 2 * static_cast<std::size_t>(K) + 1;
  std::vector<cplx> M(m * m, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < data.n(); ++i) {
    std::vector<cplx> row(m);
    for (int k = -K; k <= K; ++k) row[static_cast<std::size_t>(k + K)] = dft_direct(data.X[i], k);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) M[a * m + b] += row[a] * std::conj(row[b]);
    }
  }
  for (auto& v : M) v /= static_cast<double>(data.n());

  // T = sum_{k,l} delta_k conj(delta_l) (1/n) sum_i conj(<X_i,phi_k>) <X_i,phi_l>
  //   = sum_{k,l} delta_k conj(delta_l) conj(M_{kl})
  cplx acc{0.0, 0.0};
  for (int k = -K; k <= K; ++k) {
    for (int l = -K; l <= K; ++l) {
      const cplx dk = beta_iv.coeff(k) - beta_ex.coeff(k);
      const cplx dl = beta_iv.coeff(l) - beta_ex.coeff(l);
      acc += dk * std::conj(dl) *
             std::conj(M[static_cast<std::size_t>(k + K) * m + static_cast<std::size_t>(l + K)]);
    }
  }
  return acc.real();
}

// Transcription of the plug-in quantities of the standardized test.
struct BrutePlugins {
  double t_hat, B_hat, R_hat, V_hat;
};

inline BrutePlugins plugins_direct(const exoflr::Dataset& data, const BruteSpectra& sp,
                                   const exoflr::FourierCoeffs& beta_iv, double sigma_sq) {
  BrutePlugins out{};
  double t_sq = 0.0, rsum = 0.0;
  for (int k : sp.selected) {
    const double ratio = sp.x_at(k) * sp.w_at(k) / std::norm(sp.c_at(k)) - 1.0;
    t_sq += ratio * ratio;
    rsum += ratio;
  }
  out.t_hat = std::sqrt(t_sq);

  double design = 0.0;
  for (std::size_t i = 0; i < data.n(); ++i) {
    cplx ip{0.0, 0.0};
    for (int k = -sp.K; k <= sp.K; ++k) ip += beta_iv.coeff(k) * std::conj(dft_direct(data.X[i], k));
    design += std::norm(ip);
  }
  design /= static_cast<double>(data.n());

  const double proxy = sigma_sq + design;
  out.R_hat = proxy * rsum / static_cast<double>(data.n());
  out.V_hat = proxy * proxy;

  // sample-mean coefficients
  cplx bmu{0.0, 0.0};
  for (int k = -sp.K; k <= sp.K; ++k) {
    cplx mu{0.0, 0.0};
    for (std::size_t i = 0; i < data.n(); ++i) mu += dft_direct(data.X[i], k);
    mu /= static_cast<double>(data.n());
    bmu += beta_iv.coeff(k) * std::conj(mu);
  }
  double msum = 0.0;
  for (int k : sp.selected) {
    cplx mux{0.0, 0.0}, muw{0.0, 0.0};
    for (std::size_t i = 0; i < data.n(); ++i) {
      mux += dft_direct(data.X[i], k);
      muw += dft_direct(data.W[i], k);
    }
    mux /= static_cast<double>(data.n());
    muw /= static_cast<double>(data.n());
    const cplx d = muw / sp.c_at(k) - mux / sp.x_at(k);
    msum += std::norm(d) * sp.x_at(k);
  }
  out.B_hat = static_cast<double>(data.n()) / (2.0 * out.t_hat) * bmu.real() * bmu.real() * msum;
  return out;
}

}  // namespace oracles
