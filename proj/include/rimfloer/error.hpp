#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rimfloer {

/// Machine-readable category of a domain error. The CLI reports the name in its
/// JSON error object and maps ParseError to exit code 2, everything else to 1.
enum class ErrorCode {
    ParseError,
    IndexOutOfRange,
    UnsupportedRing,
    MixedRings,
    DimensionMismatch,
    ZeroPolynomial,
    DegreeTooLarge,
    NonPrimitiveVector,
    NonPrimitiveCurve,
    NotUnimodular,
    NotAKnot,
    NegativeGenus,
    GenusZero,
    InvalidSeifertMatrix,
    NotNormalized,
    InexactDivision,
    SizeMismatch,
    InvalidGrid,
    TooLarge,
    GradingMismatch,
    NegativeBase,
    FileNotFound,
    InvalidArgument,
};

[[nodiscard]] std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

/// Parse failure with the 0-based character offset where it was detected.
class ParseError : public Error {
  public:
    ParseError(const std::string &message, std::size_t position)
        : Error(ErrorCode::ParseError, message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

}  // namespace rimfloer
