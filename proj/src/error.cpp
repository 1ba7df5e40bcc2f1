#include "rimfloer/error.hpp"

namespace rimfloer {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::UnsupportedRing: return "UnsupportedRing";
        case ErrorCode::MixedRings: return "MixedRings";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorCode::NonPrimitiveVector: return "NonPrimitiveVector";
        case ErrorCode::NonPrimitiveCurve: return "NonPrimitiveCurve";
        case ErrorCode::NotUnimodular: return "NotUnimodular";
        case ErrorCode::NotAKnot: return "NotAKnot";
        case ErrorCode::NegativeGenus: return "NegativeGenus";
        case ErrorCode::GenusZero: return "GenusZero";
        case ErrorCode::InvalidSeifertMatrix: return "InvalidSeifertMatrix";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::InexactDivision: return "InexactDivision";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::InvalidGrid: return "InvalidGrid";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::GradingMismatch: return "GradingMismatch";
        case ErrorCode::NegativeBase: return "NegativeBase";
        case ErrorCode::FileNotFound: return "FileNotFound";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace rimfloer
