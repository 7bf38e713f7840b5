#include "genus/error.hpp"

namespace genus {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::Constant: return "Constant";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownCoefficient: return "UnknownCoefficient";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotKummer: return "NotKummer";
    case ErrorCode::WildPrime: return "WildPrime";
    case ErrorCode::DependentGenerators: return "DependentGenerators";
    case ErrorCode::ConstantRadical: return "ConstantRadical";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::UnramifiedListedPrime: return "UnramifiedListedPrime";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::DuplicatePrime: return "DuplicatePrime";
    case ErrorCode::NoDegreeLSubfield: return "NoDegreeLSubfield";
    case ErrorCode::IsKummer: return "IsKummer";
    case ErrorCode::AllDegreesDivisible: return "AllDegreesDivisible";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NoUniqueMaximum: return "NoUniqueMaximum";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace genus
