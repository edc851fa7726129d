#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "zonedet/block_diag.hpp"
#include "zonedet/bounds.hpp"
#include "zonedet/logdet.hpp"
#include "zonedet/rho.hpp"
#include "zonedet/sparse_matrix.hpp"

namespace zonedet {

enum class Parity { odd, even, none };

std::string_view to_string(Parity parity) noexcept;

/// Block sparsity classification of an off-diagonal part. Odd: only blocks
/// (i, j) with i + j odd are nonzero. Even: only blocks with i + j even.
/// Unequal block sizes always give `none`.
Parity checkerboard_parity(const SparseMatrix& m_off, const BlockPartition& partition);

enum class RhoMode {
    automatic,      ///< hermitian when applicable and small, else power, else row-sum bound
    power,
    gerschgorin,    ///< ||M_D^{-1} M_off||_inf (the point-partition Gerschgorin bound when k = n)
    hermitian,
    user_supplied,
    none,           ///< no estimate, no bounds
};

struct RhoOptions {
    RhoMode mode = RhoMode::automatic;
    double user_value = 0.0;
    int power_seeds = 4;
    double power_tol = 1e-6;
    int power_max_iter = 5000;
    /// Largest order for which `automatic` picks the dense Hermitian path.
    Index hermitian_auto_cap = 256;
};

struct ExpansionOptions {
    int order = 1;
    RhoOptions rho;
    double pivot_tol = kDefaultPivotTol;
    /// nnz cap per accumulated power, as a multiple of nnz(M).
    double memory_factor = 64.0;
    /// Replaces n in the bound constant c when set.
    std::optional<double> effective_n;
};

struct OrderBounds {
    double abs_log = 0.0;
    double rel_det = 0.0;
    std::optional<double> tight_rel;
};

struct ExpansionReport {
    Index n = 0;
    int order = 0;
    LogDet block_logdet;                ///< ln det(M_D)
    std::vector<Complex> deltas;        ///< delta_0 .. delta_order
    std::vector<Complex> traces;        ///< trace(A^p), p = 1 .. order (index p - 1)
    std::optional<RhoEstimate> rho;
    std::optional<double> lambda_min;   ///< set by the Hermitian path only
    std::optional<double> c;            ///< -n ln(1 - rho), only when rho < 1
    std::vector<OrderBounds> bounds;    ///< p = 0 .. order, empty unless rho < 1
    Parity checkerboard = Parity::none;
    std::vector<int> skipped_orders;    ///< odd p whose trace was suppressed
    Index max_power_nnz = 0;

    [[nodiscard]] bool bounds_available() const noexcept { return !bounds.empty(); }
    [[nodiscard]] LogDet delta(int p) const { return LogDet::from_complex(deltas.at(static_cast<Index>(p))); }
};

/// Truncated log-series expansion of ln det M around the block-diagonal part:
///
///   delta_0 = ln det(M_D),
///   delta_p = delta_{p-1} + ((-1)^{p-1} / p) trace(A^p),  A = M_D^{-1} M_off.
///
/// Powers of A are accumulated sparsely; the last one is only traced. When
/// M_off is an odd checkerboard the odd traces are still computed, checked to
/// vanish, and left out of the deltas. With rho >= 1 the deltas are returned
/// and `bounds` stays empty.
///
/// Throws SingularBlock, PartitionMismatch, MemoryBudgetExceeded, and
/// InvalidArgument when an odd checkerboard trace fails to vanish.
ExpansionReport zone_expansion(const SparseMatrix& m, const BlockPartition& partition,
                               const ExpansionOptions& options = {});

/// Point-partition expansion with rho from the Gerschgorin row-sum bound.
/// Throws ZeroDiagonal.
ExpansionReport diagonal_approximation(const SparseMatrix& m, int order = 0);

/// A = M_D^{-1} M_off for the given partition.
SparseMatrix zone_operator(const SparseMatrix& m, const BlockPartition& partition,
                           double pivot_tol = kDefaultPivotTol);

}  // namespace zonedet
