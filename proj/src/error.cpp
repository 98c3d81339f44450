#include "logparadox/error.hpp"

namespace logparadox {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::EmptyVector: return "EmptyVector";
    case ErrorCode::NonPositiveElement: return "NonPositiveElement";
    case ErrorCode::NonFiniteElement: return "NonFiniteElement";
    case ErrorCode::OffsetTooLarge: return "OffsetTooLarge";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ElementNotPresent: return "ElementNotPresent";
    case ErrorCode::DeleteLargerThanVector: return "DeleteLargerThanVector";
    case ErrorCode::ReplaceSizeMismatch: return "ReplaceSizeMismatch";
    case ErrorCode::VectorTooSmall: return "VectorTooSmall";
    case ErrorCode::NonPositiveInput: return "NonPositiveInput";
    case ErrorCode::FractionOutOfRange: return "FractionOutOfRange";
    case ErrorCode::AllZeroCounts: return "AllZeroCounts";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> index, std::optional<double> value)
    : std::invalid_argument(std::string(to_string(code)) + ": " + message),
      code_(code), index_(index), value_(value) {}

} // namespace logparadox
