#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace logparadox {

enum class ErrorCode {
    EmptyVector,
    NonPositiveElement,
    NonFiniteElement,
    OffsetTooLarge,
    InvalidParams,
    ElementNotPresent,
    DeleteLargerThanVector,
    ReplaceSizeMismatch,
    VectorTooSmall,
    NonPositiveInput,
    FractionOutOfRange,
    AllZeroCounts,
};

[[nodiscard]] const char* to_string(ErrorCode code) noexcept;

/// Validation / precondition failure raised by every module in the library.
/// Carries the offending element index or value when one exists.
class Error : public std::invalid_argument {
public:
    Error(ErrorCode code, const std::string& message,
          std::optional<std::size_t> index = std::nullopt,
          std::optional<double> value = std::nullopt);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] std::optional<std::size_t> index() const noexcept { return index_; }
    [[nodiscard]] std::optional<double> value() const noexcept { return value_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> index_;
    std::optional<double> value_;
};

} // namespace logparadox
