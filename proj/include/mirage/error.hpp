#pragma once

#include <stdexcept>
#include <string>

namespace mirage {

enum class ErrorCode {
    ParseError = 2,
    ZeroVector = 3,
    NotSpanning = 4,
    NotSalient = 5,
    NotRegular = 6,
    NotAdjacent = 7,
    NotGenerating = 8,
    IrregularXi = 9,
    WrongCodimension = 10,
    PointOffSlice = 11,
    InvalidPath = 12,
    Unreachable = 13,
    InterpolationMismatch = 14,
    DimensionMismatch = 15,
    NonSquare = 16,
    Singular = 17,
    NotIntegral = 18,
    Internal = 19,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::NotSpanning: return "NotSpanning";
        case ErrorCode::NotSalient: return "NotSalient";
        case ErrorCode::NotRegular: return "NotRegular";
        case ErrorCode::NotAdjacent: return "NotAdjacent";
        case ErrorCode::NotGenerating: return "NotGenerating";
        case ErrorCode::IrregularXi: return "IrregularXi";
        case ErrorCode::WrongCodimension: return "WrongCodimension";
        case ErrorCode::PointOffSlice: return "PointOffSlice";
        case ErrorCode::InvalidPath: return "InvalidPath";
        case ErrorCode::Unreachable: return "Unreachable";
        case ErrorCode::InterpolationMismatch: return "InterpolationMismatch";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::NotIntegral: return "NotIntegral";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace mirage
