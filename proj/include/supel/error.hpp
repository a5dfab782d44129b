#pragma once

#include <stdexcept>
#include <string>

namespace supel {

/// Failure categories surfaced by the library.  Every throwing operation
/// documents which kinds it can produce.
enum class ErrorKind {
    ZeroInverse,
    DivisionByZero,
    InvalidModulus,
    ModulusMismatch,
    DimensionMismatch,
    TooLarge,
    NotSubgroup,
    Singular,
    InvalidVector,
    DuplicatePoints,
    NonInvertibleLeading,
    EqualIndices,
    NotNormalized,
    ConfigMismatch,
    NonIntegral,
    BadRange,
    UnknownSuite,
    UnknownGenerator,
    DomainWarning,
    Precondition,
    VerificationFailed,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::ZeroInverse: return "ZeroInverse";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::InvalidModulus: return "InvalidModulus";
        case ErrorKind::ModulusMismatch: return "ModulusMismatch";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::NotSubgroup: return "NotSubgroup";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::InvalidVector: return "InvalidVector";
        case ErrorKind::DuplicatePoints: return "DuplicatePoints";
        case ErrorKind::NonInvertibleLeading: return "NonInvertibleLeading";
        case ErrorKind::EqualIndices: return "EqualIndices";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::ConfigMismatch: return "ConfigMismatch";
        case ErrorKind::NonIntegral: return "NonIntegral";
        case ErrorKind::BadRange: return "BadRange";
        case ErrorKind::UnknownSuite: return "UnknownSuite";
        case ErrorKind::UnknownGenerator: return "UnknownGenerator";
        case ErrorKind::DomainWarning: return "DomainWarning";
        case ErrorKind::Precondition: return "Precondition";
        case ErrorKind::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace supel
