#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zonedet {

enum class ErrorCode {
    InvalidArgument,
    IndexOutOfRange,
    NonFiniteValue,
    PartitionMismatch,
    DimensionMismatch,
    SingularBlock,
    SingularMatrix,
    ParseError,
    UnsupportedFormat,
    RhoNotLessThanOne,
    MemoryBudgetExceeded,
    EigenvalueBelowMinusOne,
    ZeroDiagonal,
    NotHermitian,
    NotPositiveDefinite,
    CholeskyBreakdown,
    NonPositiveEigenvalue,
    DenseCapExceeded,
    OrderTooLarge,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library. `index()` carries the offending
/// block, row, or file line when one applies.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, std::optional<std::size_t> index = std::nullopt);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] std::optional<std::size_t> index() const noexcept { return index_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> index_;
};

}  // namespace zonedet
