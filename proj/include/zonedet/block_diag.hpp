#pragma once

#include <vector>

#include "zonedet/dense.hpp"
#include "zonedet/logdet.hpp"
#include "zonedet/sparse_matrix.hpp"

namespace zonedet {

inline constexpr double kDefaultPivotTol = 1e-12;

/// Per-block dense LU factors of a block-diagonal matrix M_D.
class FactoredBlockDiag {
public:
    FactoredBlockDiag(BlockPartition partition, std::vector<LuFactorization> blocks);

    [[nodiscard]] const BlockPartition& partition() const noexcept { return partition_; }
    [[nodiscard]] const std::vector<LuFactorization>& blocks() const noexcept { return blocks_; }
    [[nodiscard]] const LogDet& block_logdet(Index block) const noexcept { return blocks_[block].logdet(); }
    /// ln det(M_D), summed over blocks in index order.
    [[nodiscard]] LogDet logdet() const noexcept;

private:
    BlockPartition partition_;
    std::vector<LuFactorization> blocks_;
};

/// Densifies and factors each diagonal block of m_d. Entries of m_d outside
/// the diagonal blocks are ignored.
/// Throws SingularBlock (index = block) and PartitionMismatch.
FactoredBlockDiag block_lu(const SparseMatrix& m_d, const BlockPartition& partition,
                           double pivot_tol = kDefaultPivotTol);

/// X with M_D X = B, solved block-row by block-row. Only the columns a block
/// row actually touches are materialized, so empty block columns stay empty.
SparseMatrix blockdiag_solve(const FactoredBlockDiag& factors, const SparseMatrix& b);

}  // namespace zonedet
