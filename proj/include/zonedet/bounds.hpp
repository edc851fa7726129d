#pragma once

#include <optional>

#include "zonedet/sparse_matrix.hpp"

namespace zonedet {

/// c = -n ln(1 - rho). `n` may be an effective count below the order.
double bound_constant(double n, double rho);

/// |ln det M - delta_m| <= c rho^m.
/// Throws RhoNotLessThanOne, InvalidArgument (rho < 0, order < 0).
double log_error_bound(double n, double rho, int order);

struct DetRelBounds {
    double general = 0.0;               ///< c rho^m e^{c rho^m}
    std::optional<double> tight;        ///< (7/4) c rho^m, only when c rho^m < 1
};

/// Relative error bounds for Delta_m = exp(delta_m) against det M.
DetRelBounds det_rel_error_bounds(double n, double rho, int order);

/// Upper bound 1 - exp(-n rho^2 / (1 + lambda_min)) on the relative pinching
/// error (det M_D - det M) / det M_D. Only meaningful when every eigenvalue of
/// M_D^{-1} M_off is real and > -1 (e.g. Hermitian positive-definite M); the
/// caller is responsible for that.
/// Throws EigenvalueBelowMinusOne, InvalidArgument (rho < |lambda_min|).
double pinching_bound_real(double n, double rho, double lambda_min);

/// max_i sum_{j != i} |m_ij / m_ii|: an upper bound on rho for the point
/// partition. Throws ZeroDiagonal.
double gerschgorin_rho_bound(const SparseMatrix& m);

}  // namespace zonedet
