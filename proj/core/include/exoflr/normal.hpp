#pragma once

namespace exoflr {

/// Standard normal CDF Phi(z).
double normal_cdf(double z) noexcept;

/// Standard normal quantile Phi^{-1}(p), p in (0,1).
///
/// Rational approximation (Wichura's PPND16); absolute error below 1e-15
/// over the full open interval.
double normal_quantile(double p);

}  // namespace exoflr
