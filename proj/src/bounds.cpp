#include "zonedet/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zonedet/error.hpp"

namespace zonedet {

namespace {

void check_rho(double rho) {
    if (!(rho >= 0.0)) throw Error(ErrorCode::InvalidArgument, "rho must be non-negative");
    if (rho >= 1.0) throw Error(ErrorCode::RhoNotLessThanOne, "bound requires rho < 1, got " + std::to_string(rho));
}

}  // namespace

double bound_constant(double n, double rho) {
    check_rho(rho);
    if (!(n >= 0.0)) throw Error(ErrorCode::InvalidArgument, "n must be non-negative");
    return -n * std::log1p(-rho);
}

double log_error_bound(double n, double rho, int order) {
    if (order < 0) throw Error(ErrorCode::InvalidArgument, "order must be non-negative");
    return bound_constant(n, rho) * std::pow(rho, order);
}

DetRelBounds det_rel_error_bounds(double n, double rho, int order) {
    const double x = log_error_bound(n, rho, order);
    DetRelBounds out;
    out.general = x * std::exp(x);
    if (x < 1.0) out.tight = 1.75 * x;
    return out;
}

double pinching_bound_real(double n, double rho, double lambda_min) {
    if (!(lambda_min > -1.0)) {
        throw Error(ErrorCode::EigenvalueBelowMinusOne, "lambda_min must exceed -1, got " + std::to_string(lambda_min));
    }
    if (!(rho >= 0.0) || rho + 1e-12 * std::max(1.0, rho) < std::abs(lambda_min)) {
        throw Error(ErrorCode::InvalidArgument, "rho must be at least |lambda_min|");
    }
    return -std::expm1(-n * rho * rho / (1.0 + lambda_min));
}

double gerschgorin_rho_bound(const SparseMatrix& m) {
    double best = 0.0;
    for (Index r = 0; r < m.order(); ++r) {
        const Complex d = m.at(r, r);
        if (d == Complex(0.0)) {
            throw Error(ErrorCode::ZeroDiagonal, "zero diagonal entry in row " + std::to_string(r), r);
        }
        double s = 0.0;
        auto cols = m.row_cols(r);
        auto vals = m.row_values(r);
        for (Index k = 0; k < cols.size(); ++k)
            if (cols[k] != r) s += std::abs(vals[k]);
        best = std::max(best, s / std::abs(d));
    }
    return best;
}

}  // namespace zonedet
