#include "exoflr/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "exoflr/errors.hpp"
#include "exoflr/estimators.hpp"
#include "exoflr/parallel.hpp"

namespace exoflr {

namespace {

// Compacted per-sample coefficients on the selected frequencies; the only
// state a replicate needs besides the fitted values.
struct ReplicateWorkspace {
  std::size_t n = 0;
  std::vector<int> selected;
  std::vector<std::complex<double>> xsel;   // n x S, row-major
  std::vector<std::complex<double>> wsel;   // n x S, row-major
  std::vector<double> inv_x;                // 1 / x_hat_k, matching the cut-off weight
  std::vector<std::complex<double>> c_sel;  // c_hat_k
  std::vector<double> fitted;
};

ReplicateWorkspace make_workspace(const ModelFit& fit) {
  ReplicateWorkspace ws;
  ws.n = fit.xc.n;
  ws.selected = fit.est.selected;
  const std::size_t S = ws.selected.size();
  ws.xsel.resize(ws.n * S);
  ws.wsel.resize(ws.n * S);
  ws.inv_x.resize(S);
  ws.c_sel.resize(S);
  ws.fitted = fit.fitted;
  for (std::size_t s = 0; s < S; ++s) {
    ws.inv_x[s] = 1.0 / fit.est.x(ws.selected[s]);
    ws.c_sel[s] = fit.est.c(ws.selected[s]);
  }
  for (std::size_t i = 0; i < ws.n; ++i) {
    const std::complex<double>* xr = fit.xc.row(i);
    const std::complex<double>* wr = fit.wc.row(i);
    for (std::size_t s = 0; s < S; ++s) {
      const std::size_t j = static_cast<std::size_t>(ws.selected[s] + fit.xc.K);
      ws.xsel[i * S + s] = xr[j];
      ws.wsel[i * S + s] = wr[j];
    }
  }
  return ws;
}

double replicate_on(const ReplicateWorkspace& ws, std::span<const double> errors_star,
                    std::vector<double>& ystar, std::vector<std::complex<double>>& num_x,
                    std::vector<std::complex<double>>& num_w,
                    std::vector<std::complex<double>>& delta) {
  const std::size_t n = ws.n;
  const std::size_t S = ws.selected.size();
  const double inv_n = 1.0 / static_cast<double>(n);

  for (std::size_t i = 0; i < n; ++i) ystar[i] = ws.fitted[i] + errors_star[i];

  std::fill(num_x.begin(), num_x.end(), std::complex<double>(0.0, 0.0));
  std::fill(num_w.begin(), num_w.end(), std::complex<double>(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double>* xr = ws.xsel.data() + i * S;
    const std::complex<double>* wr = ws.wsel.data() + i * S;
    const double yi = ystar[i];
    for (std::size_t s = 0; s < S; ++s) {
      num_x[s] += xr[s] * yi;
      num_w[s] += wr[s] * yi;
    }
  }
  for (std::size_t s = 0; s < S; ++s) {
    // IV coefficient minus exogenous coefficient, as in the slope fits.
    delta[s] = (num_w[s] * inv_n) / ws.c_sel[s] - (num_x[s] * inv_n) * ws.inv_x[s];
  }

  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double>* xr = ws.xsel.data() + i * S;
    std::complex<double> ip{0.0, 0.0};
    for (std::size_t s = 0; s < S; ++s) ip += delta[s] * std::conj(xr[s]);
    acc += ip.real() * ip.real() + ip.imag() * ip.imag();
  }
  return acc * inv_n;
}

}  // namespace

const char* to_string(BootstrapScheme scheme) noexcept {
  switch (scheme) {
    case BootstrapScheme::Efron: return "efron";
    case BootstrapScheme::WildMammen: return "mammen";
    case BootstrapScheme::WildRademacher: return "rademacher";
    case BootstrapScheme::WildNormal: return "normal";
  }
  return "?";
}

BootstrapScheme scheme_from_string(const std::string& name) {
  if (name == "efron") return BootstrapScheme::Efron;
  if (name == "mammen") return BootstrapScheme::WildMammen;
  if (name == "rademacher") return BootstrapScheme::WildRademacher;
  if (name == "normal") return BootstrapScheme::WildNormal;
  fail(errc::InvalidArgument, "unknown bootstrap scheme '" + name + "'");
}

double sample_multiplier(BootstrapScheme scheme, Rng& rng) {
  switch (scheme) {
    case BootstrapScheme::WildMammen: {
      const double s5 = std::sqrt(5.0);
      const double p_low = (s5 + 1.0) / (2.0 * s5);
      return rng.uniform01() < p_low ? -(s5 - 1.0) / 2.0 : (s5 + 1.0) / 2.0;
    }
    case BootstrapScheme::WildRademacher:
      return rng.uniform01() < 0.5 ? 1.0 : -1.0;
    case BootstrapScheme::WildNormal:
      return rng.normal();
    case BootstrapScheme::Efron:
      break;
  }
  fail(errc::NotAMultiplierScheme, "Efron resampling has no multiplier law");
}

std::vector<double> gen_errors(std::span<const double> residuals, BootstrapScheme scheme,
                               Rng& rng) {
  const std::size_t n = residuals.size();
  if (n == 0) fail(errc::TooFewSamples, "no residuals to resample");

  std::vector<double> errors(n);
  if (scheme == BootstrapScheme::Efron) {
    double mean = 0.0;
    for (double r : residuals) mean += r;
    mean /= static_cast<double>(n);
    std::vector<double> centered(n);
    for (std::size_t i = 0; i < n; ++i) centered[i] = residuals[i] - mean;
    for (std::size_t i = 0; i < n; ++i) {
      const auto idx = std::min<std::size_t>(
          n - 1, static_cast<std::size_t>(rng.uniform01() * static_cast<double>(n)));
      errors[i] = centered[idx];
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) errors[i] = sample_multiplier(scheme, rng) * residuals[i];
  }
  return errors;
}

double replicate(const ModelFit& fit, std::span<const double> errors_star) {
  if (errors_star.size() != fit.y.size()) {
    fail(errc::InvalidArgument, "errors_star length must equal n");
  }
  const ReplicateWorkspace ws = make_workspace(fit);
  const std::size_t S = ws.selected.size();
  std::vector<double> ystar(ws.n);
  std::vector<std::complex<double>> num_x(S), num_w(S), delta(S);
  return replicate_on(ws, errors_star, ystar, num_x, num_w, delta);
}

double replicate(const Dataset& data, const SpectralEstimates& est, const SlopeEstimate& beta_iv,
                 std::span<const double> errors_star) {
  validate(data);
  if (beta_iv.spectra_fingerprint != est.fingerprint) {
    fail(errc::InconsistentEstimates, "slope estimate does not match the spectral estimates");
  }
  ModelFit fit;
  fit.xc = analyze_all(data.X, est.K);
  fit.wc = analyze_all(data.W, est.K);
  fit.y = data.Y;
  fit.est = est;
  fit.beta_iv = beta_iv;
  fit.fitted.resize(fit.y.size());
  for (std::size_t i = 0; i < fit.y.size(); ++i) {
    fit.fitted[i] = inner_product(beta_iv.coeffs, fit.xc.row_coeffs(i)).real();
  }
  return replicate(fit, errors_star);
}

std::size_t quantile_index(int B, double gamma) {
  const double v = static_cast<double>(B) * (1.0 - gamma);
  // Nudge past representation error so that exact integers stay put.
  const auto idx = static_cast<std::size_t>(std::floor(v + 1e-9));
  return std::min<std::size_t>(idx, static_cast<std::size_t>(B) - 1);
}

BootstrapOutcome bootstrap_test(const Dataset& data, double alpha, double nu_sobolev,
                                BootstrapScheme scheme, int B, double gamma, std::uint64_t seed,
                                int K, int threads) {
  if (B < 20) fail(errc::TooFewReplicates, "need at least 20 bootstrap replicates");
  if (!(gamma > 0.0 && gamma < 1.0)) fail(errc::InvalidArgument, "gamma must lie in (0,1)");

  const ModelFit fit = fit_model(data, K, alpha, nu_sobolev);

  // Cache validity: the spectral estimates reused by every replicate must be
  // exactly what a from-scratch recomputation on (X, W) yields.
  {
    const SpectralEstimates again =
        estimate_from_coeffs(fit.xc, fit.wc, alpha, nu_sobolev);
    if (again.x_hat != fit.est.x_hat || again.w_hat != fit.est.w_hat ||
        again.c_hat != fit.est.c_hat || again.selected != fit.est.selected ||
        again.fingerprint != fit.est.fingerprint) {
      fail(errc::Internal, "cached spectral estimates diverge from recomputation");
    }
  }

  const ReplicateWorkspace ws = make_workspace(fit);
  const std::size_t S = ws.selected.size();

  BootstrapOutcome out;
  out.T_n = fit.t_n;
  out.B = B;
  out.gamma = gamma;
  out.seed = seed;
  out.replicates.resize(static_cast<std::size_t>(B));

  parallel_for(static_cast<std::size_t>(B), threads, [&](std::size_t b) {
    thread_local std::vector<double> ystar;
    thread_local std::vector<std::complex<double>> num_x, num_w, delta;
    ystar.resize(ws.n);
    num_x.resize(S);
    num_w.resize(S);
    delta.resize(S);
    Rng rng(substream(seed, b));
    const std::vector<double> errors = gen_errors(fit.residuals, scheme, rng);
    out.replicates[b] = replicate_on(ws, errors, ystar, num_x, num_w, delta);
  });

  std::vector<double> sorted = out.replicates;
  std::sort(sorted.begin(), sorted.end());
  out.q_star = sorted[quantile_index(B, gamma)];

  std::size_t count_ge = 0;
  for (double t : out.replicates) {
    if (t >= out.T_n) ++count_ge;
  }
  out.p_value = static_cast<double>(1 + count_ge) / static_cast<double>(B + 1);
  out.reject = out.T_n > out.q_star;
  return out;
}

}  // namespace exoflr
