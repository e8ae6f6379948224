#include "recurring/error.hpp"

namespace recurring {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kEmptyCoefficients: return "EmptyCoefficients";
    case Errc::kDegenerateCore: return "DegenerateCore";
    case Errc::kZeroPolynomial: return "ZeroPolynomial";
    case Errc::kNotPrime: return "NotPrime";
    case Errc::kModulusMismatch: return "ModulusMismatch";
    case Errc::kDivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::kXNotInvertible: return "XNotInvertible";
    case Errc::kSingularMatrix: return "SingularMatrix";
    case Errc::kSingularCompanion: return "SingularCompanion";
    case Errc::kNonUnitTrailing: return "NonUnitTrailing";
    case Errc::kLegOutOfRange: return "LegOutOfRange";
    case Errc::kContextMismatch: return "ContextMismatch";
    case Errc::kNotCoprime: return "NotCoprime";
    case Errc::kHypothesisNotMet: return "HypothesisNotMet";
    case Errc::kInternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace recurring
