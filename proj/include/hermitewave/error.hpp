#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hermitewave {

enum class ErrorCode {
    InvalidArgument,
    DivisionByZero,
    NumericalFailure,
    SingularMatrix,
    SingularJacobian,
    Diverged,
    NotConverged,
    DegenerateIterate,
    DegenerateRoot,
    IllConditioned,
    DegenerateParameters,
    TruncationTooCoarse,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::SingularJacobian: return "SingularJacobian";
    case ErrorCode::Diverged: return "Diverged";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::DegenerateIterate: return "DegenerateIterate";
    case ErrorCode::DegenerateRoot: return "DegenerateRoot";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
    case ErrorCode::TruncationTooCoarse: return "TruncationTooCoarse";
    }
    return "Unknown";
}

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline void require(bool condition, ErrorCode code, const std::string& what) {
    if (!condition) throw Error(code, what);
}

} // namespace hermitewave
