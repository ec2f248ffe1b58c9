#pragma once

#include <stdexcept>
#include <string>

namespace exoflr {

enum class errc {
  // fourier
  TruncationTooLarge,
  InvalidCurve,
  GridTooCoarse,
  TruncationMismatch,
  // spectra
  TooFewSamples,
  InvalidRegularization,
  // estimators
  NoSelectedFrequencies,
  DegenerateSpectrum,
  DegenerateCrossSpectrum,
  InvalidWeight,
  // exogeneity test
  InconsistentEstimates,
  DegenerateStudentization,
  // bootstrap
  NotAMultiplierScheme,
  TooFewReplicates,
  // dgp
  DomainError,
  InvalidBandwidth,
  InvalidCorrelationPair,
  // harness / io
  ParseError,
  IoError,
  CellFailed,
  // misc
  InvalidArgument,
  Internal,
};

const char* to_string(errc code) noexcept;

/// Library error carrying one of the contract error codes above.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace exoflr
