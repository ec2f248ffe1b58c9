#pragma once

#include <cstdint>

#include "exoflr/rng.hpp"
#include "exoflr/spectra.hpp"

namespace exoflr {

/// Simulation model: X(t) = (t + 1/2) Z1, W(t) = (t + 1/2) Z2 + H with
/// H ~ Uniform(-1/2, 1/2), responses Y = (1/(p+1)) sum_l X(t_l) beta(t_l)
/// + sigma U, and (Z1, Z2, U) trivariate normal with
/// corr(Z1, Z2) = nu_instr, corr(Z1, U) = rho, corr(Z2, U) = 0.
struct DgpConfig {
  std::size_t n = 0;
  int p = 100;
  double rho = 0.0;       // endogeneity corr(Z1, U)
  double nu_instr = 0.0;  // instrument strength corr(Z1, Z2)
  double sigma = 1.4;     // error scale 7/5
  int beta_id = 1;        // slope function 1, 2 or 3
  double h = 0.1;         // mollifier bandwidth for beta 3
  std::uint64_t seed = 0;
};

/// Throws unless n >= 2, sigma > 0, beta_id in {1,2,3}, h > 0 and
/// rho^2 + nu_instr^2 < 1.
void validate(const DgpConfig& cfg);

/// The three slope functions on [0,1]:
///   beta1: sin(4 pi t) + sin(8 pi t)/2 + sin(20 pi t)/7
///   beta2: (2/pi) arcsin(cos(2 pi t))  (triangle wave)
///   beta3: square wave (indicator of [1/4, 3/4] per unit cell) mollified by
///          a bump kernel of bandwidth h; evaluated by adaptive quadrature
///          with absolute error below 1e-6.
double slope(int beta_id, double h, double t);

/// slope() sampled on the grid of order p; beta3 grids are computed once per
/// (p, h) and cached.
SampledCurve slope_curve(int beta_id, double h, int p);

/// The ramp curve (t + 1/2) z on the grid of order p.
SampledCurve ramp_curve(double z, int p);

struct DriverDraw {
  double z1 = 0.0;
  double z2 = 0.0;
  double u = 0.0;
};

/// One draw of (Z1, Z2, U) from N3(0, Sigma) with
/// Sigma = [[3, nu sqrt6, rho sqrt3], [nu sqrt6, 2, 0], [rho sqrt3, 0, 1]],
/// via the lower-triangular Cholesky factor. Requires rho^2 + nu^2 < 1
/// (InvalidCorrelationPair), the exact positive-definiteness region:
/// det Sigma = 6 (1 - nu^2 - rho^2).
DriverDraw sample_driver(double rho, double nu_instr, Rng& rng);

/// A full synthetic dataset; consumes four draws per sample (Z1, Z2, U, H)
/// in that order. The overload without an explicit generator seeds one from
/// cfg.seed.
Dataset sample_dataset(const DgpConfig& cfg, Rng& rng);
Dataset sample_dataset(const DgpConfig& cfg);

}  // namespace exoflr
