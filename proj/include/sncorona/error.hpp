// error.hpp - error codes and the exception type thrown by sncorona.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sncorona {

enum class ErrorCode {
    IndexOutOfRange,
    SelfLoop,
    DuplicateEdge,
    ParseError,
    IoError,
    SizeLimitExceeded,
    NotSquare,
    NotSymmetric,
    ComplexRootsDetected,
    PoleAtEvaluationPoint,
    NotRegular,
    NotNetRegular,
    NetDegreeNotAnEigenvalue,
    RowSumEigenvalueMissing,
    NonZeroRowSum,
    ZeroNetDegree,
    HypothesisNotMet,
    InputsNotCospectral,
    InputsIsomorphic,
    InexactDivision,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::ComplexRootsDetected: return "ComplexRootsDetected";
        case ErrorCode::PoleAtEvaluationPoint: return "PoleAtEvaluationPoint";
        case ErrorCode::NotRegular: return "NotRegular";
        case ErrorCode::NotNetRegular: return "NotNetRegular";
        case ErrorCode::NetDegreeNotAnEigenvalue: return "NetDegreeNotAnEigenvalue";
        case ErrorCode::RowSumEigenvalueMissing: return "RowSumEigenvalueMissing";
        case ErrorCode::NonZeroRowSum: return "NonZeroRowSum";
        case ErrorCode::ZeroNetDegree: return "ZeroNetDegree";
        case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
        case ErrorCode::InputsNotCospectral: return "InputsNotCospectral";
        case ErrorCode::InputsIsomorphic: return "InputsIsomorphic";
        case ErrorCode::InexactDivision: return "InexactDivision";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure with the 1-based line number of the offending input line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, ErrorCode cause, const std::string& detail)
        : Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ": " + std::string(to_string(cause)) + ": " + detail),
          line_(line), cause_(cause) {}

    std::size_t line() const noexcept { return line_; }
    ErrorCode cause() const noexcept { return cause_; }

private:
    std::size_t line_;
    ErrorCode cause_;
};

}  // namespace sncorona
