#pragma once

#include <string_view>

namespace zonedet {

enum class RhoMethod { power_iteration, gerschgorin_bound, hermitian_exact, user_supplied };

std::string_view to_string(RhoMethod method) noexcept;

/// Estimate of rho(M_D^{-1} M_off). `converged` is only ever false for
/// power iteration.
struct RhoEstimate {
    double value = 0.0;
    RhoMethod method = RhoMethod::user_supplied;
    bool converged = true;
    int iterations = 0;
};

}  // namespace zonedet
