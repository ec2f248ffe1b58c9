#include <cmath>
#include <numbers>

#include "doctest.h"
#include "common.hpp"
#include "oracles.hpp"
#include "exoflr/errors.hpp"
#include "exoflr/exogeneity_test.hpp"
#include "exoflr/normal.hpp"
#include "exoflr/pipeline.hpp"

using namespace exoflr;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("exotest") {

TEST_CASE("identical estimators give a vanishing statistic") {
  Rng rng(7);
  Dataset data = testgen::toy_dataset(rng, 8, 21, 3);
  data.W = data.X;
  const SpectralEstimates est = estimate(data, 4, 1e-6, 0.0);
  const SlopeEstimate ex = fit_exogenous(data, est);
  const SlopeEstimate iv = fit_iv(data, est);
  CHECK(statistic(data, iv, ex) <= 1e-12);
}

TEST_CASE("hand case: delta = cos tone against scaled tone designs") {
  // beta_iv - beta_ex = cos(2 pi t), X_i = a_i cos(2 pi t)
  // => T_n = (1/n) sum a_i^2 / 4.
  const std::vector<double> amps{1.0, -0.5, 2.0};
  Dataset data;
  const int p = 24;
  for (double a : amps) {
    SampledCurve x;
    x.values.resize(p + 1);
    for (int l = 0; l <= p; ++l) {
      x.values[static_cast<std::size_t>(l)] = a * std::cos(2.0 * kPi * l / double(p + 1));
    }
    data.W.push_back(x);
    data.X.push_back(std::move(x));
    data.Y.push_back(0.0);
  }
  SlopeEstimate iv, ex;
  iv.coeffs = FourierCoeffs(3);
  iv.coeffs.at(1) = 0.5;
  iv.coeffs.at(-1) = 0.5;
  ex.coeffs = FourierCoeffs(3);
  iv.spectra_fingerprint = ex.spectra_fingerprint = 123;
  double expect = 0.0;
  for (double a : amps) expect += a * a / 4.0;
  expect /= double(amps.size());
  CHECK(statistic(data, iv, ex) == Approx(expect).epsilon(1e-12));
}

TEST_CASE("per-sample form equals the quadratic-form oracle") {
  Rng rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    Dataset data = testgen::toy_dataset(rng, 3 + trial % 6, 17, 3);
    const SpectralEstimates est = estimate(data, 4, 1e-6, 0.0);
    if (est.selected.empty()) continue;
    const SlopeEstimate ex = fit_exogenous(data, est);
    const SlopeEstimate iv = fit_iv(data, est);
    const double fast = statistic(data, iv, ex);
    const double quad = oracles::statistic_quadform_direct(data, iv.coeffs, ex.coeffs);
    CHECK(fast == Approx(quad).epsilon(1e-10));
  }
}

TEST_CASE("statistic rejects estimates from different spectra") {
  Rng rng(23);
  Dataset data = testgen::toy_dataset(rng, 5, 17, 2);
  const SpectralEstimates a = estimate(data, 3, 1e-6, 0.0);
  const SpectralEstimates b = estimate(data, 3, 1e-5, 0.0);
  const SlopeEstimate iv = fit_iv(data, a);
  const SlopeEstimate ex = fit_exogenous(data, b);
  try {
    (void)statistic(data, iv, ex);
    FAIL("expected InconsistentEstimates");
  } catch (const Error& e) {
    CHECK(e.code() == errc::InconsistentEstimates);
  }
}

TEST_CASE("statistic is invariant under sample permutation") {
  Rng rng(29);
  Dataset data = testgen::toy_dataset(rng, 6, 19, 3);
  const SpectralEstimates est = estimate(data, 4, 1e-6, 0.0);
  const SlopeEstimate ex = fit_exogenous(data, est);
  const SlopeEstimate iv = fit_iv(data, est);
  const double t1 = statistic(data, iv, ex);
  Dataset perm;
  for (std::size_t i : {5u, 2u, 0u, 4u, 1u, 3u}) {
    perm.X.push_back(data.X[i]);
    perm.W.push_back(data.W[i]);
    perm.Y.push_back(data.Y[i]);
  }
  CHECK(statistic(perm, iv, ex) == Approx(t1).epsilon(1e-12));
}

TEST_CASE("self-instrumentation degenerates the studentization") {
  Rng rng(31);
  Dataset data = testgen::toy_dataset(rng, 6, 21, 3);
  data.W = data.X;
  const SpectralEstimates est = estimate(data, 5, 1e-6, 0.0);
  const SlopeEstimate iv = fit_iv(data, est);
  try {
    (void)plugins(data, est, iv, 1.0);
    FAIL("expected DegenerateStudentization");
  } catch (const Error& e) {
    CHECK(e.code() == errc::DegenerateStudentization);
  }
}

TEST_CASE("synthetically centered data kill the mean bias term") {
  Rng rng(37);
  // pair every curve with its negative: sample means are exactly zero
  Dataset data;
  for (int i = 0; i < 3; ++i) {
    SampledCurve x = testgen::band_limited_curve(rng, 16, 2);
    SampledCurve w = testgen::band_limited_curve(rng, 16, 2);
    SampledCurve xn = x, wn = w;
    for (double& v : xn.values) v = -v;
    for (double& v : wn.values) v = -v;
    data.X.push_back(x);
    data.X.push_back(xn);
    data.W.push_back(w);
    data.W.push_back(wn);
    const double y = rng.normal();
    data.Y.push_back(y);
    data.Y.push_back(y);
  }
  const SpectralEstimates est = estimate(data, 3, 1e-8, 0.0);
  REQUIRE(!est.selected.empty());
  const SlopeEstimate iv = fit_iv(data, est);
  const PluginEstimates pl = plugins(data, est, iv, 0.5);
  CHECK(pl.B_hat_n == 0.0);
}

TEST_CASE("n=5 toy plug-ins match the brute-force transcription") {
  Rng rng(41);
  Dataset data = testgen::toy_dataset(rng, 5, 13, 2);
  const SpectralEstimates est = estimate(data, 2, 1e-6, 0.0);
  const auto brute_sp = oracles::spectra_direct(data, 2, 1e-6, 0.0);
  const SlopeEstimate iv = fit_iv(data, est);
  const double sigma_sq = sigma_hat_sq(data, iv);
  const PluginEstimates pl = plugins(data, est, iv, sigma_sq);
  const auto brute = oracles::plugins_direct(data, brute_sp, iv.coeffs, sigma_sq);
  CHECK(pl.t_hat_n == Approx(brute.t_hat).epsilon(1e-12));
  CHECK(pl.B_hat_n == Approx(brute.B_hat).epsilon(1e-12));
  CHECK(pl.R_hat_n == Approx(brute.R_hat).epsilon(1e-12));
  CHECK(pl.V_hat_n == Approx(brute.V_hat).epsilon(1e-12));
}

TEST_CASE("plug-in invariant: V_hat >= sigma^4") {
  Rng rng(43);
  Dataset data = testgen::toy_dataset(rng, 6, 17, 2);
  const SpectralEstimates est = estimate(data, 3, 1e-6, 0.0);
  const SlopeEstimate iv = fit_iv(data, est);
  const double sigma_sq = sigma_hat_sq(data, iv);
  REQUIRE(sigma_sq > 0.0);
  const PluginEstimates pl = plugins(data, est, iv, sigma_sq);
  CHECK(pl.V_hat_n >= sigma_sq * sigma_sq);
}

TEST_CASE("rejection rule is strict at the boundary") {
  const double u95 = normal_quantile(0.95);
  CHECK(!reject_at_level(u95, 0.05));
  CHECK(reject_at_level(std::nextafter(u95, 2.0), 0.05));
  CHECK(!reject_at_level(std::nextafter(u95, 0.0), 0.05));
}

TEST_CASE("normal quantile and CDF against frozen high-precision values") {
  CHECK(normal_quantile(0.95) == Approx(1.6448536269514727).epsilon(1e-12));
  CHECK(normal_quantile(0.975) == Approx(1.9599639845400542).epsilon(1e-12));
  CHECK(normal_quantile(0.99) == Approx(2.3263478740408411).epsilon(1e-12));
  CHECK(normal_quantile(0.9) == Approx(1.2815515655446004).epsilon(1e-12));
  CHECK(normal_quantile(0.5) == 0.0);
  CHECK(normal_quantile(1e-6) == Approx(-4.7534243088228989).epsilon(1e-12));
  // upper tail goes through 1-p, whose rounding already moves the exact
  // answer by ~5e-11; still far inside the 1e-8 contract
  CHECK(normal_quantile(0.999999) == Approx(4.7534243088228989).epsilon(1e-9));
  for (double p : {0.001, 0.025, 0.2, 0.5, 0.8, 0.975, 0.999}) {
    CHECK(normal_cdf(normal_quantile(p)) == Approx(p).epsilon(1e-10));
  }
}

TEST_CASE("asymptotic_test outcome is internally consistent") {
  Rng rng(47);
  Dataset data = testgen::toy_dataset(rng, 40, 21, 3);
  const TestOutcome out = asymptotic_test(data, 1e-4, 0.0, 0.05);
  CHECK(out.T_n >= 0.0);
  CHECK(out.t_hat_n > 0.0);
  CHECK(out.V_hat_n > 0.0);
  const double n = static_cast<double>(data.n());
  CHECK(out.z == Approx(n * (out.T_n - out.B_hat_n - out.R_hat_n) /
                        (out.t_hat_n * std::sqrt(out.V_hat_n)))
                     .epsilon(1e-12));
  CHECK(out.p_value == Approx(1.0 - normal_cdf(out.z)).epsilon(1e-12));
  CHECK(out.reject == (out.z > normal_quantile(0.95)));
  CHECK(out.reject == (out.p_value < 0.05));
}

TEST_CASE("monotonicity: larger statistic, larger z, smaller p") {
  // fix the plug-ins, move T_n
  const double t_hat = 2.0, B = 0.1, R = 0.05, V = 4.0, n = 50;
  double last_z = -1e300;
  double last_p = 2.0;
  for (double T : {0.0, 0.1, 0.2, 0.5, 1.0, 5.0}) {
    const double z = n * (T - B - R) / (t_hat * std::sqrt(V));
    const double p = 1.0 - normal_cdf(z);
    CHECK(z > last_z);
    CHECK(p <= last_p);
    last_z = z;
    last_p = p;
  }
}

TEST_CASE("empty selection propagates from the pipeline") {
  Rng rng(53);
  Dataset data = testgen::toy_dataset(rng, 5, 13, 2);
  try {
    (void)asymptotic_test(data, 1e9, 0.0, 0.05);
    FAIL("expected NoSelectedFrequencies");
  } catch (const Error& e) {
    CHECK(e.code() == errc::NoSelectedFrequencies);
  }
}

}  // TEST_SUITE
