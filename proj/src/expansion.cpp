#include "zonedet/expansion.hpp"

#include <cmath>
#include <string>

#include "zonedet/error.hpp"
#include "zonedet/oracle.hpp"

namespace zonedet {

std::string_view to_string(Parity parity) noexcept {
    switch (parity) {
        case Parity::odd: return "odd";
        case Parity::even: return "even";
        case Parity::none: return "none";
    }
    return "none";
}

Parity checkerboard_parity(const SparseMatrix& m_off, const BlockPartition& partition) {
    if (partition.order() != m_off.order() || !partition.equal_sized()) return Parity::none;
    const Index bs = partition.size(0);
    bool any_odd = false, any_even = false;
    for (Index r = 0; r < m_off.order(); ++r) {
        const Index bi = r / bs;
        for (Index c : m_off.row_cols(r)) {
            if ((bi + c / bs) % 2) any_odd = true;
            else any_even = true;
        }
        if (any_odd && any_even) return Parity::none;
    }
    return any_odd ? Parity::odd : Parity::even;
}

SparseMatrix zone_operator(const SparseMatrix& m, const BlockPartition& partition, double pivot_tol) {
    auto [m_d, m_off] = split(m, partition);
    return blockdiag_solve(block_lu(m_d, partition, pivot_tol), m_off);
}

namespace {

RhoEstimate row_sum_bound(const SparseMatrix& a) {
    return {a.norm_inf(), RhoMethod::gerschgorin_bound, true, 0};
}

void estimate_rho(const SparseMatrix& m, const BlockPartition& partition, const SparseMatrix& a,
                  const RhoOptions& opts, ExpansionReport& report) {
    switch (opts.mode) {
        case RhoMode::none:
            return;
        case RhoMode::user_supplied:
            if (!(opts.user_value >= 0.0)) throw Error(ErrorCode::InvalidArgument, "supplied rho must be >= 0");
            report.rho = RhoEstimate{opts.user_value, RhoMethod::user_supplied, true, 0};
            return;
        case RhoMode::gerschgorin:
            report.rho = row_sum_bound(a);
            return;
        case RhoMode::power:
            report.rho = oracle::power_iteration_rho(a, opts.power_seeds, opts.power_tol, opts.power_max_iter);
            return;
        case RhoMode::hermitian: {
            const auto spec = oracle::symmetrized_zone_spectrum(m, partition);
            report.rho = RhoEstimate{spec.rho, RhoMethod::hermitian_exact, true, 0};
            report.lambda_min = spec.lambda_min;
            return;
        }
        case RhoMode::automatic: {
            if (m.order() <= opts.hermitian_auto_cap && is_hermitian(m, 1e-10)) {
                try {
                    const auto spec = oracle::symmetrized_zone_spectrum(m, partition);
                    report.rho = RhoEstimate{spec.rho, RhoMethod::hermitian_exact, true, 0};
                    report.lambda_min = spec.lambda_min;
                    return;
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::NotPositiveDefinite) throw;
                }
            }
            auto power = oracle::power_iteration_rho(a, opts.power_seeds, opts.power_tol, opts.power_max_iter);
            report.rho = power.converged ? power : row_sum_bound(a);
            return;
        }
    }
}

}  // namespace

ExpansionReport zone_expansion(const SparseMatrix& m, const BlockPartition& partition,
                               const ExpansionOptions& options) {
    if (options.order < 0) throw Error(ErrorCode::InvalidArgument, "order must be non-negative");
    if (partition.order() != m.order()) {
        throw Error(ErrorCode::PartitionMismatch, "partition does not match matrix order");
    }
    const Index n = m.order();
    auto [m_d, m_off] = split(m, partition);
    const FactoredBlockDiag factors = block_lu(m_d, partition, options.pivot_tol);
    const SparseMatrix a = blockdiag_solve(factors, m_off);

    ExpansionReport report;
    report.n = n;
    report.order = options.order;
    report.block_logdet = factors.logdet();
    report.checkerboard = checkerboard_parity(m_off, partition);
    report.deltas.push_back(report.block_logdet.as_complex());
    report.max_power_nnz = a.nnz();

    const double cap = options.memory_factor * static_cast<double>(std::max<Index>(m.nnz(), 1));
    auto check_budget = [&](const SparseMatrix& power, int p) {
        report.max_power_nnz = std::max(report.max_power_nnz, power.nnz());
        if (static_cast<double>(power.nnz()) > cap) {
            throw Error(ErrorCode::MemoryBudgetExceeded,
                        "power " + std::to_string(p) + " has " + std::to_string(power.nnz()) +
                            " nonzeros, cap is " + std::to_string(static_cast<Index>(cap)));
        }
    };
    if (options.order >= 1) check_budget(a, 1);

    const double a_norm = a.norm1();
    SparseMatrix power = a;  // A^{p-1} at the top of iteration p >= 2
    for (int p = 1; p <= options.order; ++p) {
        Complex tr;
        if (p == 1) {
            tr = trace(a);
        } else if (p == options.order) {
            tr = trace_of_product(power, a);
        } else {
            power = sparse_product(power, a);
            check_budget(power, p);
            tr = trace(power);
        }
        report.traces.push_back(tr);

        const Complex prev = report.deltas.back();
        if (report.checkerboard == Parity::odd && p % 2 == 1) {
            const double limit = static_cast<double>(n) * 1e-12 * std::pow(a_norm, p);
            if (std::abs(tr) > limit) {
                throw Error(ErrorCode::InvalidArgument,
                            "odd checkerboard trace of power " + std::to_string(p) + " does not vanish");
            }
            report.skipped_orders.push_back(p);
            report.deltas.push_back(prev);
        } else {
            const double sign = p % 2 == 1 ? 1.0 : -1.0;
            report.deltas.push_back(prev + (sign / p) * tr);
        }
    }

    estimate_rho(m, partition, a, options.rho, report);
    if (report.rho && report.rho->value < 1.0) {
        const double n_eff = options.effective_n.value_or(static_cast<double>(n));
        report.c = bound_constant(n_eff, report.rho->value);
        for (int p = 0; p <= options.order; ++p) {
            const auto rel = det_rel_error_bounds(n_eff, report.rho->value, p);
            report.bounds.push_back({log_error_bound(n_eff, report.rho->value, p), rel.general, rel.tight});
        }
    }
    return report;
}

ExpansionReport diagonal_approximation(const SparseMatrix& m, int order) {
    (void)gerschgorin_rho_bound(m);  // ZeroDiagonal check
    ExpansionOptions opts;
    opts.order = order;
    opts.rho.mode = RhoMode::gerschgorin;
    return zone_expansion(m, BlockPartition::point(m.order()), opts);
}

}  // namespace zonedet
