#include <liebound/error.hpp>

namespace liebound {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::NotSquare: return "NOT_SQUARE";
    case ErrorCode::ZeroPolynomial: return "ZERO_POLYNOMIAL";
    case ErrorCode::NotSubalgebra: return "NOT_SUBALGEBRA";
    case ErrorCode::NotIdeal: return "NOT_IDEAL";
    case ErrorCode::InternalInconsistency: return "INTERNAL_INCONSISTENCY";
    case ErrorCode::NotInvertible: return "NOT_INVERTIBLE";
    case ErrorCode::NotHomomorphism: return "NOT_HOMOMORPHISM";
    case ErrorCode::NotInvariant: return "NOT_INVARIANT";
    case ErrorCode::PreconditionViolation: return "PRECONDITION_VIOLATION";
    case ErrorCode::NoSolution: return "NO_SOLUTION";
    case ErrorCode::NotSolvable: return "NOT_SOLVABLE";
    case ErrorCode::NotSemisimple: return "NOT_SEMISIMPLE";
    case ErrorCode::SplittingFailed: return "SPLITTING_FAILED";
    case ErrorCode::IdealNotPermuted: return "IDEAL_NOT_PERMUTED";
    case ErrorCode::NotPeriodic: return "NOT_PERIODIC";
    case ErrorCode::OrderTooLarge: return "ORDER_TOO_LARGE";
    case ErrorCode::InvalidParameter: return "INVALID_PARAMETER";
    case ErrorCode::EmptyFamily: return "EMPTY_FAMILY";
    case ErrorCode::NotSemisimpleAut: return "NOT_SEMISIMPLE_AUT";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::Overflow: return "OVERFLOW";
  }
  return "UNKNOWN";
}

}  // namespace liebound
