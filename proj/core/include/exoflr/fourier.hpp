#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace exoflr {

/// Real-valued function on [0,1] sampled at the p+1 equispaced points
/// t_l = l/(p+1), l = 0..p. The grid covers one period of [0,1); the
/// point t = 1 is never stored (it duplicates t = 0 for periodic
/// functions).
struct SampledCurve {
  std::vector<double> values;

  int p() const noexcept { return static_cast<int>(values.size()) - 1; }
};

/// Complex Fourier coefficients <f, phi_k> for |k| <= K, with
/// phi_k(t) = exp(2 pi i k t) and <f,g> = integral of f * conj(g).
/// Coefficients of real curves are Hermitian symmetric.
class FourierCoeffs {
 public:
  FourierCoeffs() = default;
  explicit FourierCoeffs(int truncation)
      : K_(truncation), c_(2 * static_cast<std::size_t>(truncation) + 1) {}

  int truncation() const noexcept { return K_; }

  std::complex<double> coeff(int k) const { return c_[static_cast<std::size_t>(k + K_)]; }
  std::complex<double>& at(int k) { return c_[static_cast<std::size_t>(k + K_)]; }

  const std::vector<std::complex<double>>& raw() const noexcept { return c_; }

 private:
  int K_ = 0;
  std::vector<std::complex<double>> c_;  // index k + K_
};

/// Fourier coefficients of a family of curves sharing one truncation order:
/// row i holds <f_i, phi_k> for k = -K..K.
struct CoeffTable {
  int K = 0;
  std::size_t n = 0;
  std::vector<std::complex<double>> data;  // row-major, stride 2K+1

  std::size_t stride() const noexcept { return 2 * static_cast<std::size_t>(K) + 1; }
  const std::complex<double>* row(std::size_t i) const { return data.data() + i * stride(); }
  std::complex<double> at(std::size_t i, int k) const {
    return data[i * stride() + static_cast<std::size_t>(k + K)];
  }
  FourierCoeffs row_coeffs(std::size_t i) const;
};

/// Projects a sampled curve onto phi_k for |k| <= K:
///   coeff(k) = (1/(p+1)) sum_l values[l] exp(-2 pi i k l/(p+1)).
/// Requires K <= floor(p/2) (TruncationTooLarge) and finite samples
/// (InvalidCurve).
FourierCoeffs analyze(const SampledCurve& curve, int K);

/// analyze() for every curve in the family; all curves must share p.
CoeffTable analyze_all(const std::vector<SampledCurve>& curves, int K);

/// Evaluates values[l] = Re sum_k coeff(k) exp(+2 pi i k l/(p+1)) on the
/// grid of order p. Requires p >= 2K (GridTooCoarse). Inverse of analyze()
/// on band-limited curves.
SampledCurve synthesize(const FourierCoeffs& coeffs, int p);

/// Parseval inner product sum_{|k|<=K} a_k conj(b_k), the coefficient-space
/// form of the integral of a * conj(b). Truncations must match
/// (TruncationMismatch).
std::complex<double> inner_product(const FourierCoeffs& a, const FourierCoeffs& b);

}  // namespace exoflr
