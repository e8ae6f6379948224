#pragma once

#include <stdexcept>
#include <string>

namespace recurring {

enum class Errc {
  kEmptyCoefficients,
  kDegenerateCore,
  kZeroPolynomial,
  kNotPrime,
  kModulusMismatch,
  kDivisionByZeroPoly,
  kXNotInvertible,
  kSingularMatrix,
  kSingularCompanion,
  kNonUnitTrailing,
  kLegOutOfRange,
  kContextMismatch,
  kNotCoprime,
  kHypothesisNotMet,
  kInternalInconsistency,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace recurring
