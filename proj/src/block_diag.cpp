#include "zonedet/block_diag.hpp"

#include <algorithm>
#include <string>

#include "zonedet/error.hpp"

namespace zonedet {

FactoredBlockDiag::FactoredBlockDiag(BlockPartition partition, std::vector<LuFactorization> blocks)
    : partition_(std::move(partition)), blocks_(std::move(blocks)) {
    if (blocks_.size() != partition_.num_blocks()) {
        throw Error(ErrorCode::PartitionMismatch, "one factorization per block required");
    }
}

LogDet FactoredBlockDiag::logdet() const noexcept {
    LogDet total;
    for (const auto& b : blocks_) total += b.logdet();
    return total;
}

FactoredBlockDiag block_lu(const SparseMatrix& m_d, const BlockPartition& partition, double pivot_tol) {
    if (partition.order() != m_d.order()) {
        throw Error(ErrorCode::PartitionMismatch, "partition does not match matrix order");
    }
    std::vector<LuFactorization> blocks;
    blocks.reserve(partition.num_blocks());
    for (Index b = 0; b < partition.num_blocks(); ++b) {
        const Index lo = partition.begin(b);
        const Index sz = partition.size(b);
        DenseMatrix dense(sz, sz);
        for (Index r = 0; r < sz; ++r) {
            auto cols = m_d.row_cols(lo + r);
            auto vals = m_d.row_values(lo + r);
            for (Index k = 0; k < cols.size(); ++k) {
                if (cols[k] >= lo && cols[k] < lo + sz) dense(r, cols[k] - lo) = vals[k];
            }
        }
        try {
            blocks.emplace_back(std::move(dense), pivot_tol);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::SingularMatrix) throw;
            throw Error(ErrorCode::SingularBlock, "diagonal block " + std::to_string(b) + " is singular", b);
        }
    }
    return FactoredBlockDiag(partition, std::move(blocks));
}

SparseMatrix blockdiag_solve(const FactoredBlockDiag& factors, const SparseMatrix& b) {
    const BlockPartition& part = factors.partition();
    if (b.order() != part.order()) throw Error(ErrorCode::DimensionMismatch, "right-hand side order mismatch");
    const Index n = b.order();

    std::vector<Index> ptr(n + 1, 0);
    std::vector<Index> out_cols;
    std::vector<Complex> out_vals;
    std::vector<Index> touched;
    std::vector<Index> slot(n, 0);

    for (Index blk = 0; blk < part.num_blocks(); ++blk) {
        const Index lo = part.begin(blk);
        const Index sz = part.size(blk);

        touched.clear();
        for (Index r = lo; r < lo + sz; ++r) {
            auto cols = b.row_cols(r);
            touched.insert(touched.end(), cols.begin(), cols.end());
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (Index j = 0; j < touched.size(); ++j) slot[touched[j]] = j;

        DenseMatrix rhs(sz, touched.size());
        for (Index r = 0; r < sz; ++r) {
            auto cols = b.row_cols(lo + r);
            auto vals = b.row_values(lo + r);
            for (Index k = 0; k < cols.size(); ++k) rhs(r, slot[cols[k]]) = vals[k];
        }
        if (!touched.empty()) factors.blocks()[blk].solve_in_place(rhs);

        for (Index r = 0; r < sz; ++r) {
            auto row = rhs.row(r);
            for (Index j = 0; j < touched.size(); ++j) {
                if (std::abs(row[j]) >= kDropTolerance) {
                    out_cols.push_back(touched[j]);
                    out_vals.push_back(row[j]);
                }
            }
            ptr[lo + r + 1] = out_cols.size();
        }
    }
    return SparseMatrix::from_csr(n, std::move(ptr), std::move(out_cols), std::move(out_vals));
}

}  // namespace zonedet
