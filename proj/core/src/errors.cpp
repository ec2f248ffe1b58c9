#include "exoflr/errors.hpp"

namespace exoflr {

const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::TruncationTooLarge: return "TruncationTooLarge";
    case errc::InvalidCurve: return "InvalidCurve";
    case errc::GridTooCoarse: return "GridTooCoarse";
    case errc::TruncationMismatch: return "TruncationMismatch";
    case errc::TooFewSamples: return "TooFewSamples";
    case errc::InvalidRegularization: return "InvalidRegularization";
    case errc::NoSelectedFrequencies: return "NoSelectedFrequencies";
    case errc::DegenerateSpectrum: return "DegenerateSpectrum";
    case errc::DegenerateCrossSpectrum: return "DegenerateCrossSpectrum";
    case errc::InvalidWeight: return "InvalidWeight";
    case errc::InconsistentEstimates: return "InconsistentEstimates";
    case errc::DegenerateStudentization: return "DegenerateStudentization";
    case errc::NotAMultiplierScheme: return "NotAMultiplierScheme";
    case errc::TooFewReplicates: return "TooFewReplicates";
    case errc::DomainError: return "DomainError";
    case errc::InvalidBandwidth: return "InvalidBandwidth";
    case errc::InvalidCorrelationPair: return "InvalidCorrelationPair";
    case errc::ParseError: return "ParseError";
    case errc::IoError: return "IoError";
    case errc::CellFailed: return "CellFailed";
    case errc::InvalidArgument: return "InvalidArgument";
    case errc::Internal: return "Internal";
  }
  return "UnknownError";
}

}  // namespace exoflr
