#include "exoflr/dgp.hpp"

#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <utility>

#include "exoflr/errors.hpp"
#include "exoflr/quadrature.hpp"

namespace exoflr {

namespace {

constexpr double kPi = std::numbers::pi;

// exp(-1/(1-u^2)) on (-1,1), zero outside.
double bump(double u) {
  const double d = 1.0 - u * u;
  if (d <= 0.0) return 0.0;
  return std::exp(-1.0 / d);
}

double bump_norm() {
  static const double C =
      adaptive_simpson([](double u) { return bump(u); }, -1.0, 1.0, 1e-12);
  return C;
}

// Mollified square wave: sum over unit cells of indicator([n+1/4, n+3/4])
// convolved with the rescaled bump kernel centered at 2nh. Cells are
// truncated to those overlapping [-1, 2]; for t in [0,1] and small h the
// others cannot reach the kernel support anyway.
double slope3(double t, double h) {
  const double C = bump_norm();
  double acc = 0.0;
  for (int cell = -1; cell <= 1; ++cell) {
    const double lo = std::max(static_cast<double>(cell) + 0.25,
                               t - h * static_cast<double>(2 * cell + 1));
    const double hi = std::min(static_cast<double>(cell) + 0.75,
                               t - h * static_cast<double>(2 * cell - 1));
    if (hi <= lo) continue;
    const double integral = adaptive_simpson(
        [&](double s) { return bump((t - s) / h - 2.0 * static_cast<double>(cell)); }, lo, hi,
        1e-7 * C * h);
    acc += integral / (C * h);
  }
  return acc;
}

struct DriverFactor {
  double l11, l21, l22, l31, l32, l33;
};

DriverFactor factor_driver(double rho, double nu) {
  if (!(rho * rho + nu * nu < 1.0)) {
    fail(errc::InvalidCorrelationPair, "need rho^2 + nu_instr^2 < 1, det Sigma = 6(1-nu^2-rho^2)");
  }
  const double s3 = std::sqrt(3.0);
  const double s6 = std::sqrt(6.0);
  // Sigma = [[3, nu s6, rho s3], [nu s6, 2, 0], [rho s3, 0, 1]]
  DriverFactor f;
  f.l11 = s3;
  f.l21 = nu * s6 / f.l11;
  const double p22 = 2.0 - f.l21 * f.l21;
  if (!(p22 > 0.0)) fail(errc::InvalidCorrelationPair, "driver covariance not positive definite");
  f.l22 = std::sqrt(p22);
  f.l31 = rho * s3 / f.l11;
  f.l32 = -f.l21 * f.l31 / f.l22;
  const double p33 = 1.0 - f.l31 * f.l31 - f.l32 * f.l32;
  if (!(p33 > 0.0)) fail(errc::InvalidCorrelationPair, "driver covariance not positive definite");
  f.l33 = std::sqrt(p33);
  return f;
}

DriverDraw draw_from(const DriverFactor& f, Rng& rng) {
  const double n1 = rng.normal();
  const double n2 = rng.normal();
  const double n3 = rng.normal();
  DriverDraw d;
  d.z1 = f.l11 * n1;
  d.z2 = f.l21 * n1 + f.l22 * n2;
  d.u = f.l31 * n1 + f.l32 * n2 + f.l33 * n3;
  return d;
}

}  // namespace

void validate(const DgpConfig& cfg) {
  if (cfg.n < 2) fail(errc::TooFewSamples, "need at least two samples");
  if (cfg.p < 1) fail(errc::InvalidCurve, "grid order must be positive");
  if (!(cfg.sigma > 0.0)) fail(errc::InvalidArgument, "sigma must be positive");
  if (cfg.beta_id < 1 || cfg.beta_id > 3) fail(errc::InvalidArgument, "beta_id must be 1, 2 or 3");
  if (!(cfg.h > 0.0)) fail(errc::InvalidBandwidth, "mollifier bandwidth must be positive");
  if (!(cfg.rho * cfg.rho + cfg.nu_instr * cfg.nu_instr < 1.0)) {
    fail(errc::InvalidCorrelationPair, "need rho^2 + nu_instr^2 < 1");
  }
}

double slope(int beta_id, double h, double t) {
  if (!(t >= 0.0 && t <= 1.0)) fail(errc::DomainError, "t must lie in [0,1]");
  if (!(h > 0.0)) fail(errc::InvalidBandwidth, "mollifier bandwidth must be positive");
  switch (beta_id) {
    case 1:
      return std::sin(4.0 * kPi * t) + 0.5 * std::sin(8.0 * kPi * t) +
             std::sin(20.0 * kPi * t) / 7.0;
    case 2:
      return 2.0 / kPi * std::asin(std::cos(2.0 * kPi * t));
    case 3:
      return slope3(t, h);
    default:
      fail(errc::InvalidArgument, "beta_id must be 1, 2 or 3");
  }
}

SampledCurve slope_curve(int beta_id, double h, int p) {
  if (p < 1) fail(errc::InvalidCurve, "grid order must be positive");
  if (!(h > 0.0)) fail(errc::InvalidBandwidth, "mollifier bandwidth must be positive");

  if (beta_id == 3) {
    // beta3 is quadrature-priced; memoize per (p, h).
    static std::mutex cache_mutex;
    static std::map<std::pair<int, std::uint64_t>, std::shared_ptr<const SampledCurve>> cache;
    std::uint64_t hbits = 0;
    std::memcpy(&hbits, &h, sizeof hbits);
    const std::pair<int, std::uint64_t> key{p, hbits};
    {
      std::lock_guard<std::mutex> lock(cache_mutex);
      auto it = cache.find(key);
      if (it != cache.end()) return *it->second;
    }
    SampledCurve curve;
    curve.values.resize(static_cast<std::size_t>(p) + 1);
    for (int l = 0; l <= p; ++l) {
      curve.values[static_cast<std::size_t>(l)] =
          slope3(static_cast<double>(l) / static_cast<double>(p + 1), h);
    }
    auto shared = std::make_shared<const SampledCurve>(std::move(curve));
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, shared);
    return *shared;
  }

  SampledCurve curve;
  curve.values.resize(static_cast<std::size_t>(p) + 1);
  for (int l = 0; l <= p; ++l) {
    curve.values[static_cast<std::size_t>(l)] =
        slope(beta_id, h, static_cast<double>(l) / static_cast<double>(p + 1));
  }
  return curve;
}

SampledCurve ramp_curve(double z, int p) {
  SampledCurve curve;
  curve.values.resize(static_cast<std::size_t>(p) + 1);
  for (int l = 0; l <= p; ++l) {
    const double t = static_cast<double>(l) / static_cast<double>(p + 1);
    curve.values[static_cast<std::size_t>(l)] = (t + 0.5) * z;
  }
  return curve;
}

DriverDraw sample_driver(double rho, double nu_instr, Rng& rng) {
  return draw_from(factor_driver(rho, nu_instr), rng);
}

Dataset sample_dataset(const DgpConfig& cfg, Rng& rng) {
  validate(cfg);
  const DriverFactor factor = factor_driver(cfg.rho, cfg.nu_instr);
  const SampledCurve beta = slope_curve(cfg.beta_id, cfg.h, cfg.p);
  const std::size_t grid = static_cast<std::size_t>(cfg.p) + 1;
  const double inv_grid = 1.0 / static_cast<double>(grid);

  Dataset data;
  data.X.reserve(cfg.n);
  data.W.reserve(cfg.n);
  data.Y.reserve(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    const DriverDraw d = draw_from(factor, rng);
    const double shift = rng.uniform(-0.5, 0.5);

    SampledCurve x = ramp_curve(d.z1, cfg.p);
    SampledCurve w = ramp_curve(d.z2, cfg.p);
    for (double& v : w.values) v += shift;

    double riemann = 0.0;
    for (std::size_t l = 0; l < grid; ++l) riemann += x.values[l] * beta.values[l];
    data.Y.push_back(riemann * inv_grid + cfg.sigma * d.u);
    data.X.push_back(std::move(x));
    data.W.push_back(std::move(w));
  }
  return data;
}

Dataset sample_dataset(const DgpConfig& cfg) {
  Rng rng(cfg.seed);
  return sample_dataset(cfg, rng);
}

}  // namespace exoflr
