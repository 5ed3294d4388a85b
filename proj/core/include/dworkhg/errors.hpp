#pragma once

#include <stdexcept>
#include <string>

namespace dworkhg {

// Every failure mode the library reports. CLI consumers map these to
// structured error records, so the set is part of the public contract.
enum class ErrorCode {
    ZeroDenominator,
    DivisionByZero,
    SingularMatrix,
    DimensionMismatch,
    NonConstantEntries,
    NonRationalSpectrum,
    DivergentAtInfinity,
    PoleAtPoint,
    NotBasisMonomial,
    ReductionOverflow,
    CyclicVectorFailure,
    StillSingular,
    NotPowerCompatible,
    HigherOrderPole,
    MissingUnitBeta,
    AmbiguousUnitBeta,
    ZeroDenominatorInRecurrence,
    ParseError,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonConstantEntries: return "NonConstantEntries";
        case ErrorCode::NonRationalSpectrum: return "NonRationalSpectrum";
        case ErrorCode::DivergentAtInfinity: return "DivergentAtInfinity";
        case ErrorCode::PoleAtPoint: return "PoleAtPoint";
        case ErrorCode::NotBasisMonomial: return "NotBasisMonomial";
        case ErrorCode::ReductionOverflow: return "ReductionOverflow";
        case ErrorCode::CyclicVectorFailure: return "CyclicVectorFailure";
        case ErrorCode::StillSingular: return "StillSingular";
        case ErrorCode::NotPowerCompatible: return "NotPowerCompatible";
        case ErrorCode::HigherOrderPole: return "HigherOrderPole";
        case ErrorCode::MissingUnitBeta: return "MissingUnitBeta";
        case ErrorCode::AmbiguousUnitBeta: return "AmbiguousUnitBeta";
        case ErrorCode::ZeroDenominatorInRecurrence: return "ZeroDenominatorInRecurrence";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

}  // namespace dworkhg
