// Shared generators for randomized tests; fixed seeds keep every run
// identical.
#pragma once

#include <cmath>
#include <numbers>

#include "exoflr/rng.hpp"
#include "exoflr/spectra.hpp"

namespace testgen {

// Random curve with frequencies up to kmax on a grid of order p.
inline exoflr::SampledCurve band_limited_curve(exoflr::Rng& rng, int p, int kmax) {
  exoflr::SampledCurve curve;
  curve.values.assign(static_cast<std::size_t>(p) + 1, 0.0);
  for (int k = 0; k <= kmax; ++k) {
    const double a = rng.uniform(-1.0, 1.0);
    const double b = k == 0 ? 0.0 : rng.uniform(-1.0, 1.0);
    for (int l = 0; l <= p; ++l) {
      const double t = static_cast<double>(l) / static_cast<double>(p + 1);
      curve.values[static_cast<std::size_t>(l)] +=
          a * std::cos(2.0 * std::numbers::pi * k * t) +
          b * std::sin(2.0 * std::numbers::pi * k * t);
    }
  }
  return curve;
}

// Small generic dataset: random band-limited X and W plus noisy scalar
// responses. W is a perturbed copy of X so the cross spectrum is nonzero.
inline exoflr::Dataset toy_dataset(exoflr::Rng& rng, std::size_t n, int p, int kmax) {
  exoflr::Dataset data;
  for (std::size_t i = 0; i < n; ++i) {
    exoflr::SampledCurve x = band_limited_curve(rng, p, kmax);
    exoflr::SampledCurve w = band_limited_curve(rng, p, kmax);
    for (std::size_t l = 0; l < w.values.size(); ++l) w.values[l] = 0.6 * x.values[l] + 0.4 * w.values[l];
    data.X.push_back(std::move(x));
    data.W.push_back(std::move(w));
    data.Y.push_back(rng.normal());
  }
  return data;
}

}  // namespace testgen
