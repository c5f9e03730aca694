#pragma once

#include <stdexcept>
#include <string>

namespace qeat {

enum class ErrorKind {
    NotHermitian,
    NoConvergence,
    DomainError,
    DimensionMismatch,
    InvalidRank,
    InvalidDistribution,
    AlphaOutOfRange,
    SupportViolation,
    DivergenceInfinite,
    NotClassicalRegister,
    GammaOutOfRange,
};

const char* to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::InvalidRank: return "InvalidRank";
        case ErrorKind::InvalidDistribution: return "InvalidDistribution";
        case ErrorKind::AlphaOutOfRange: return "AlphaOutOfRange";
        case ErrorKind::SupportViolation: return "SupportViolation";
        case ErrorKind::DivergenceInfinite: return "DivergenceInfinite";
        case ErrorKind::NotClassicalRegister: return "NotClassicalRegister";
        case ErrorKind::GammaOutOfRange: return "GammaOutOfRange";
    }
    return "Unknown";
}

}  // namespace qeat
