#include "exoflr/estimators.hpp"

#include <cmath>

#include "exoflr/errors.hpp"

namespace exoflr {

namespace {

// (1/n) sum_i coeff_{i,k} y_i for each selected k.
std::vector<std::complex<double>> raw_numerators(const CoeffTable& table,
                                                 std::span<const double> y,
                                                 const std::vector<int>& selected) {
  if (table.n != y.size()) fail(errc::InvalidArgument, "coefficient table and Y disagree in n");
  const double inv_n = 1.0 / static_cast<double>(table.n);
  std::vector<std::complex<double>> num(selected.size(), {0.0, 0.0});
  for (std::size_t i = 0; i < table.n; ++i) {
    const std::complex<double>* row = table.row(i);
    const double yi = y[i];
    for (std::size_t s = 0; s < selected.size(); ++s) {
      num[s] += row[static_cast<std::size_t>(selected[s] + table.K)] * yi;
    }
  }
  for (auto& v : num) v *= inv_n;
  return num;
}

void require_selection(const SpectralEstimates& est) {
  if (est.selected.empty()) {
    fail(errc::NoSelectedFrequencies, "regularized frequency set K_hat_n is empty");
  }
}

SlopeEstimate make_estimate(const SpectralEstimates& est, SlopeKind kind,
                            const std::vector<std::complex<double>>& coeffs_on_selected) {
  SlopeEstimate slope;
  slope.kind = kind;
  slope.spectra_fingerprint = est.fingerprint;
  slope.coeffs = FourierCoeffs(est.K);
  for (std::size_t s = 0; s < est.selected.size(); ++s) {
    slope.coeffs.at(est.selected[s]) = coeffs_on_selected[s];
  }
  return slope;
}

}  // namespace

const char* to_string(SlopeKind kind) noexcept {
  switch (kind) {
    case SlopeKind::Exogenous: return "exogenous";
    case SlopeKind::InstrumentalVariable: return "iv";
    case SlopeKind::Weighted: return "weighted";
  }
  return "?";
}

SlopeEstimate fit_exogenous(const CoeffTable& xc, std::span<const double> y,
                            const SpectralEstimates& est) {
  require_selection(est);
  for (int k : est.selected) {
    if (!(est.x(k) > 0.0)) fail(errc::DegenerateSpectrum, "x_hat vanishes on a selected frequency");
  }
  RegularizationWeights cutoff{[](double x_k, double, int) { return 1.0 / x_k; }};
  SlopeEstimate slope = fit_weighted(xc, xc, y, est, cutoff, SlopeKind::Exogenous);
  slope.kind = SlopeKind::Exogenous;
  return slope;
}

SlopeEstimate fit_exogenous(const Dataset& data, const SpectralEstimates& est) {
  validate(data);
  return fit_exogenous(analyze_all(data.X, est.K), data.Y, est);
}

SlopeEstimate fit_iv(const CoeffTable& wc, std::span<const double> y,
                     const SpectralEstimates& est) {
  require_selection(est);
  auto num = raw_numerators(wc, y, est.selected);
  std::vector<std::complex<double>> coeffs(num.size());
  for (std::size_t s = 0; s < num.size(); ++s) {
    const std::complex<double> c = est.c(est.selected[s]);
    if (c == std::complex<double>(0.0, 0.0)) {
      fail(errc::DegenerateCrossSpectrum, "c_hat vanishes on a selected frequency");
    }
    coeffs[s] = num[s] / c;
  }
  return make_estimate(est, SlopeKind::InstrumentalVariable, coeffs);
}

SlopeEstimate fit_iv(const Dataset& data, const SpectralEstimates& est) {
  validate(data);
  return fit_iv(analyze_all(data.W, est.K), data.Y, est);
}

SlopeEstimate fit_weighted(const CoeffTable& xc, const CoeffTable& wc, std::span<const double> y,
                           const SpectralEstimates& est, const RegularizationWeights& w,
                           SlopeKind target) {
  require_selection(est);
  if (!w.weight) fail(errc::InvalidWeight, "weight function is empty");
  if (target == SlopeKind::Weighted) {
    fail(errc::InvalidArgument, "target must be Exogenous or InstrumentalVariable");
  }

  const bool iv = target == SlopeKind::InstrumentalVariable;
  auto num = raw_numerators(iv ? wc : xc, y, est.selected);
  std::vector<std::complex<double>> coeffs(num.size());
  for (std::size_t s = 0; s < num.size(); ++s) {
    const int k = est.selected[s];
    if (iv) {
      // optimal-instrument numerator g_hat_k
      num[s] *= std::conj(est.c(k)) / est.w(k);
    }
    const double wk = w.weight(est.x(k), est.lambda(k), k);
    if (!std::isfinite(wk) || wk < 0.0) {
      fail(errc::InvalidWeight, "weight not finite and nonnegative on selected frequency");
    }
    coeffs[s] = num[s] * wk;
  }
  return make_estimate(est, SlopeKind::Weighted, coeffs);
}

SlopeEstimate fit_weighted(const Dataset& data, const SpectralEstimates& est,
                           const RegularizationWeights& w, SlopeKind target) {
  validate(data);
  return fit_weighted(analyze_all(data.X, est.K), analyze_all(data.W, est.K), data.Y, est, w,
                      target);
}

std::vector<double> residuals(const CoeffTable& xc, std::span<const double> y,
                              const SlopeEstimate& slope) {
  if (xc.n != y.size()) fail(errc::InvalidArgument, "coefficient table and Y disagree in n");
  if (xc.K != slope.coeffs.truncation()) {
    fail(errc::TruncationMismatch, "slope and data truncation orders differ");
  }
  std::vector<double> r(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    const std::complex<double> fit = inner_product(slope.coeffs, xc.row_coeffs(i));
    if (std::fabs(fit.imag()) >= 1e-8) {
      fail(errc::Internal, "fitted value has non-negligible imaginary part");
    }
    r[i] = y[i] - fit.real();
  }
  return r;
}

std::vector<double> residuals(const Dataset& data, const SlopeEstimate& slope) {
  validate(data);
  return residuals(analyze_all(data.X, slope.coeffs.truncation()), data.Y, slope);
}

double sigma_hat_sq(const CoeffTable& xc, std::span<const double> y,
                    const SlopeEstimate& slope_iv) {
  if (slope_iv.kind != SlopeKind::InstrumentalVariable) {
    fail(errc::InvalidArgument, "sigma_hat_sq requires the IV slope estimate");
  }
  const auto r = residuals(xc, y, slope_iv);
  double acc = 0.0;
  for (double v : r) acc += v * v;
  return acc / static_cast<double>(r.size());
}

double sigma_hat_sq(const Dataset& data, const SlopeEstimate& slope_iv) {
  validate(data);
  return sigma_hat_sq(analyze_all(data.X, slope_iv.coeffs.truncation()), data.Y, slope_iv);
}

}  // namespace exoflr
