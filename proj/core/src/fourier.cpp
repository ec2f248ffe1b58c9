#include "exoflr/fourier.hpp"

#include <cmath>
#include <numbers>

#include "exoflr/errors.hpp"

namespace exoflr {

namespace {

// Twiddle table w[m] = exp(-2 pi i m / N), m = 0..N-1, built so that
// w[N-m] == conj(w[m]) holds bit-exactly. Coefficients at -k then come out
// as exact conjugates of those at +k for real inputs.
std::vector<std::complex<double>> twiddles(int N) {
  std::vector<std::complex<double>> w(static_cast<std::size_t>(N));
  const double step = 2.0 * std::numbers::pi / static_cast<double>(N);
  for (int m = 0; m <= N / 2; ++m) {
    const double angle = step * static_cast<double>(m);
    w[static_cast<std::size_t>(m)] = {std::cos(angle), -std::sin(angle)};
  }
  for (int m = N / 2 + 1; m < N; ++m) {
    w[static_cast<std::size_t>(m)] = std::conj(w[static_cast<std::size_t>(N - m)]);
  }
  return w;
}

void check_curve(const SampledCurve& curve) {
  if (curve.values.size() < 2) fail(errc::InvalidCurve, "curve needs at least 2 samples");
  for (double v : curve.values) {
    if (!std::isfinite(v)) fail(errc::InvalidCurve, "non-finite sample value");
  }
}

void analyze_into(const SampledCurve& curve, int K,
                  const std::vector<std::complex<double>>& w,
                  std::complex<double>* out /* length 2K+1, index k+K */) {
  const int N = curve.p() + 1;
  const double scale = 1.0 / static_cast<double>(N);
  for (int k = 0; k <= K; ++k) {
    std::complex<double> acc{0.0, 0.0};
    std::size_t m = 0;  // (k*l) mod N, advanced incrementally
    for (int l = 0; l < N; ++l) {
      acc += curve.values[static_cast<std::size_t>(l)] * w[m];
      m += static_cast<std::size_t>(k);
      if (m >= static_cast<std::size_t>(N)) m -= static_cast<std::size_t>(N);
    }
    acc *= scale;
    out[K + k] = acc;
    out[K - k] = std::conj(acc);
  }
}

}  // namespace

FourierCoeffs CoeffTable::row_coeffs(std::size_t i) const {
  FourierCoeffs c(K);
  const std::complex<double>* r = row(i);
  for (std::size_t j = 0; j < stride(); ++j) c.at(static_cast<int>(j) - K) = r[j];
  return c;
}

FourierCoeffs analyze(const SampledCurve& curve, int K) {
  check_curve(curve);
  if (K < 0) fail(errc::InvalidArgument, "negative truncation order");
  if (K > curve.p() / 2) fail(errc::TruncationTooLarge, "K exceeds Nyquist bound floor(p/2)");
  const auto w = twiddles(curve.p() + 1);
  FourierCoeffs coeffs(K);
  analyze_into(curve, K, w, &coeffs.at(-K));
  return coeffs;
}

CoeffTable analyze_all(const std::vector<SampledCurve>& curves, int K) {
  CoeffTable table;
  table.K = K;
  table.n = curves.size();
  if (curves.empty()) return table;

  const int p = curves.front().p();
  for (const auto& c : curves) {
    check_curve(c);
    if (c.p() != p) fail(errc::InvalidCurve, "curves do not share a grid order");
  }
  if (K < 0) fail(errc::InvalidArgument, "negative truncation order");
  if (K > p / 2) fail(errc::TruncationTooLarge, "K exceeds Nyquist bound floor(p/2)");

  const auto w = twiddles(p + 1);
  table.data.resize(table.n * table.stride());
  for (std::size_t i = 0; i < table.n; ++i) {
    analyze_into(curves[i], K, w, table.data.data() + i * table.stride());
  }
  return table;
}

SampledCurve synthesize(const FourierCoeffs& coeffs, int p) {
  const int K = coeffs.truncation();
  if (p < 2 * K) fail(errc::GridTooCoarse, "grid order p must be at least 2K");
  const int N = p + 1;
  const auto w = twiddles(N);  // exp(+...) is conj of the table entry

  SampledCurve curve;
  curve.values.resize(static_cast<std::size_t>(N));
  for (int l = 0; l < N; ++l) {
    std::complex<double> acc{0.0, 0.0};
    for (int k = -K; k <= K; ++k) {
      const std::size_t m =
          static_cast<std::size_t>(((static_cast<long long>(k) * l) % N + N) % N);
      acc += coeffs.coeff(k) * std::conj(w[m]);
    }
    curve.values[static_cast<std::size_t>(l)] = acc.real();
  }
  return curve;
}

std::complex<double> inner_product(const FourierCoeffs& a, const FourierCoeffs& b) {
  if (a.truncation() != b.truncation()) {
    fail(errc::TruncationMismatch, "inner product requires equal truncation orders");
  }
  std::complex<double> acc{0.0, 0.0};
  const int K = a.truncation();
  for (int k = -K; k <= K; ++k) acc += a.coeff(k) * std::conj(b.coeff(k));
  return acc;
}

}  // namespace exoflr
