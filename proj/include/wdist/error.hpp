#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wdist {

enum class ErrorCode {
    NotPrime,
    NotIrreducible,
    NotPrimitive,
    TooLarge,
    DivisionByZero,
    NotADivisor,
    MixedModulus,
    NonPositive,
    LemmaViolation,
    IdentityViolation,
    PreconditionViolation,
    CaseNotCovered,
    InadmissibleT,
    NonRationalSum,
    DegenerateCode,
    InvalidParameters,
    NoMatch,
    ParseError,
    Overflow,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::NotPrimitive: return "NotPrimitive";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NotADivisor: return "NotADivisor";
        case ErrorCode::MixedModulus: return "MixedModulus";
        case ErrorCode::NonPositive: return "NonPositive";
        case ErrorCode::LemmaViolation: return "LemmaViolation";
        case ErrorCode::IdentityViolation: return "IdentityViolation";
        case ErrorCode::PreconditionViolation: return "PreconditionViolation";
        case ErrorCode::CaseNotCovered: return "CaseNotCovered";
        case ErrorCode::InadmissibleT: return "InadmissibleT";
        case ErrorCode::NonRationalSum: return "NonRationalSum";
        case ErrorCode::DegenerateCode: return "DegenerateCode";
        case ErrorCode::InvalidParameters: return "InvalidParameters";
        case ErrorCode::NoMatch: return "NoMatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace wdist
