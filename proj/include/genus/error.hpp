#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace genus {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  FieldTooLarge,
  DivisionByZero,
  NotMonic,
  Constant,
  SyntaxError,
  UnknownCoefficient,
  ZeroPolynomial,
  NotKummer,
  WildPrime,
  DependentGenerators,
  ConstantRadical,
  FieldMismatch,
  InternalInconsistency,
  GroupTooLarge,
  UnramifiedListedPrime,
  NotIrreducible,
  DuplicatePrime,
  NoDegreeLSubfield,
  IsKummer,
  AllDegreesDivisible,
  NotContained,
  BoundExceeded,
  NoUniqueMaximum,
  PreconditionViolated,
  InvalidInput,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `witness` carries optional
/// machine-readable context (a dependency vector, a prime, a position).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

}  // namespace genus
