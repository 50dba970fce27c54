#pragma once

#include <stdexcept>
#include <string>

namespace golden {

// Uniform error taxonomy.  Each condition maps to one of the CLI exit codes:
//   assertion-class errors -> 1, configuration-class -> 2, capacity-class -> 3.
enum class ErrorCode {
    // assertion-class: a mathematical invariant that must hold was violated,
    // or an operation was applied to a value outside its mathematical domain
    ZeroVector,
    OutOfQuadrant,
    WrongSector,
    Unbounded,
    FracOfNegative,
    NotAUnit,
    NotPositive,
    NotUnimodular,
    RationalRho,
    MixedField,
    TooFew,
    InternalCheck,
    // configuration-class: bad user input
    BadParity,
    BadK,
    BadRational,
    NonPositive,
    IndexOutOfRange,
    ParseError,
    ConfigError,
    // capacity-class: a configurable resource budget was exhausted
    IterationCap,
    CapacityExceeded,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

    // CLI exit code bucket for this error (0 is success, never an error).
    int exit_code() const {
        switch (code_) {
            case ErrorCode::BadParity:
            case ErrorCode::BadK:
            case ErrorCode::BadRational:
            case ErrorCode::NonPositive:
            case ErrorCode::IndexOutOfRange:
            case ErrorCode::ParseError:
            case ErrorCode::ConfigError:
                return 2;
            case ErrorCode::IterationCap:
            case ErrorCode::CapacityExceeded:
                return 3;
            default:
                return 1;
        }
    }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

// Internal consistency check; failures indicate a bug, not bad input.
inline void check(bool ok, const std::string& what) {
    if (!ok) raise(ErrorCode::InternalCheck, "internal check failed: " + what);
}

// Typed precondition check.
inline void check(bool ok, ErrorCode code, const std::string& what) {
    if (!ok) raise(code, what);
}

}  // namespace golden
