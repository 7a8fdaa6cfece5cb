#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quartic_forge {

enum class ErrorCode {
    InvalidArgument,
    DivisionByZero,
    ModulusMismatch,
    Parse,
    WrongDegree,
    Inseparable,
    NotUsable,   // prime divides lc(f)·disc(f); the caller skips it
    Reducible,
    SingularGenerator,
    DataError,   // malformed or inconsistent data file
    Io,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
        case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
        case ErrorCode::ModulusMismatch: return "MODULUS_MISMATCH";
        case ErrorCode::Parse: return "PARSE";
        case ErrorCode::WrongDegree: return "WRONG_DEGREE";
        case ErrorCode::Inseparable: return "INSEPARABLE";
        case ErrorCode::NotUsable: return "NOT_USABLE";
        case ErrorCode::Reducible: return "REDUCIBLE";
        case ErrorCode::SingularGenerator: return "SINGULAR_GENERATOR";
        case ErrorCode::DataError: return "DATA_ERROR";
        case ErrorCode::Io: return "IO";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace quartic_forge
