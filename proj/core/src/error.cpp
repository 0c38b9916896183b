#include "cccodes/error.hpp"

namespace cccodes {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::ClosedFormMismatch: return "ClosedFormMismatch";
        case ErrorKind::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
        case ErrorKind::PredictionMismatch: return "PredictionMismatch";
        case ErrorKind::DegenerateSet: return "DegenerateSet";
        case ErrorKind::OddDegree: return "OddDegree";
        case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
        case ErrorKind::ZeroCode: return "ZeroCode";
        case ErrorKind::CompositionViolation: return "CompositionViolation";
        case ErrorKind::DuplicateWords: return "DuplicateWords";
        case ErrorKind::CompositionLengthMismatch: return "CompositionLengthMismatch";
    }
    return "Unknown";
}

bool is_verification_failure(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::ClosedFormMismatch:
        case ErrorKind::PredictionMismatch:
        case ErrorKind::CompositionViolation:
        case ErrorKind::DuplicateWords:
            return true;
        default:
            return false;
    }
}

}  // namespace cccodes
