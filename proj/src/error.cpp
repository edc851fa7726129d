#include "zonedet/error.hpp"

#include "zonedet/rho.hpp"

namespace zonedet {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NonFiniteValue: return "NonFiniteValue";
        case ErrorCode::PartitionMismatch: return "PartitionMismatch";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::SingularBlock: return "SingularBlock";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
        case ErrorCode::RhoNotLessThanOne: return "RhoNotLessThanOne";
        case ErrorCode::MemoryBudgetExceeded: return "MemoryBudgetExceeded";
        case ErrorCode::EigenvalueBelowMinusOne: return "EigenvalueBelowMinusOne";
        case ErrorCode::ZeroDiagonal: return "ZeroDiagonal";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorCode::CholeskyBreakdown: return "CholeskyBreakdown";
        case ErrorCode::NonPositiveEigenvalue: return "NonPositiveEigenvalue";
        case ErrorCode::DenseCapExceeded: return "DenseCapExceeded";
        case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what, std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), index_(index) {}

std::string_view to_string(RhoMethod method) noexcept {
    switch (method) {
        case RhoMethod::power_iteration: return "power_iteration";
        case RhoMethod::gerschgorin_bound: return "gerschgorin_bound";
        case RhoMethod::hermitian_exact: return "hermitian_exact";
        case RhoMethod::user_supplied: return "user_supplied";
    }
    return "unknown";
}

}  // namespace zonedet
