#include "exoflr/pipeline.hpp"

#include <cmath>

#include "exoflr/errors.hpp"
#include "exoflr/exogeneity_test.hpp"

namespace exoflr {

ModelFit fit_model(const Dataset& data, int K, double alpha, double nu_sobolev) {
  validate(data);
  if (K < 0) K = data.p() / 2;

  ModelFit fit;
  fit.xc = analyze_all(data.X, K);
  fit.wc = analyze_all(data.W, K);
  fit.y = data.Y;
  fit.est = estimate_from_coeffs(fit.xc, fit.wc, alpha, nu_sobolev);
  fit.beta_ex = fit_exogenous(fit.xc, fit.y, fit.est);
  fit.beta_iv = fit_iv(fit.wc, fit.y, fit.est);

  fit.fitted.resize(fit.y.size());
  fit.residuals.resize(fit.y.size());
  double rss = 0.0;
  for (std::size_t i = 0; i < fit.y.size(); ++i) {
    const std::complex<double> ip = inner_product(fit.beta_iv.coeffs, fit.xc.row_coeffs(i));
    if (std::fabs(ip.imag()) >= 1e-8) {
      fail(errc::Internal, "fitted value has non-negligible imaginary part");
    }
    fit.fitted[i] = ip.real();
    fit.residuals[i] = fit.y[i] - fit.fitted[i];
    rss += fit.residuals[i] * fit.residuals[i];
  }
  fit.sigma_sq = rss / static_cast<double>(fit.y.size());
  fit.t_n = statistic_from_coeffs(fit.xc, fit.beta_iv, fit.beta_ex);
  return fit;
}

}  // namespace exoflr
