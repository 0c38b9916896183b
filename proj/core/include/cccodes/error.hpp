#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cccodes {

enum class ErrorKind {
    InvalidArgument,
    NotPrime,
    EvenCharacteristic,
    ReducibleModulus,
    FieldMismatch,
    DivisionByZero,
    ClosedFormMismatch,
    ZeroLeadingCoefficient,
    PredictionMismatch,
    DegenerateSet,
    OddDegree,
    UnsupportedDegree,
    ZeroCode,
    CompositionViolation,
    DuplicateWords,
    CompositionLengthMismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

// True for kinds that mean "a computed value disagrees with a prediction",
// as opposed to bad input parameters.
bool is_verification_failure(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

    ErrorKind kind() const noexcept { return kind_; }
    // The message without the kind prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace cccodes
