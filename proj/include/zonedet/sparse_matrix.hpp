#pragma once

#include <span>
#include <utility>
#include <vector>

#include "zonedet/types.hpp"

namespace zonedet {

/// Square complex sparse matrix in compressed sparse row form.
///
/// Rows are sorted by column, there are no duplicate (row, col) pairs and no
/// stored exact zeros. Instances are immutable once built, so they may be
/// shared freely between threads.
class SparseMatrix {
public:
    SparseMatrix() = default;

    /// Builds a matrix from unordered triplets. Duplicates are summed and
    /// entries whose summed value is exactly zero are dropped.
    /// Throws IndexOutOfRange, NonFiniteValue, InvalidArgument (n == 0).
    static SparseMatrix from_entries(Index n, std::span<const Triplet> triplets);

    /// Builds directly from CSR arrays that are already canonical (sorted
    /// columns, unique, no zeros). Only cheap structural checks are done.
    static SparseMatrix from_csr(Index n, std::vector<Index> row_ptr, std::vector<Index> col_idx,
                                 std::vector<Complex> values);

    static SparseMatrix identity(Index n);
    static SparseMatrix zero(Index n);

    [[nodiscard]] Index order() const noexcept { return order_; }
    [[nodiscard]] Index nnz() const noexcept { return values_.size(); }

    [[nodiscard]] std::span<const Index> row_cols(Index row) const noexcept {
        return {col_idx_.data() + row_ptr_[row], row_ptr_[row + 1] - row_ptr_[row]};
    }
    [[nodiscard]] std::span<const Complex> row_values(Index row) const noexcept {
        return {values_.data() + row_ptr_[row], row_ptr_[row + 1] - row_ptr_[row]};
    }
    [[nodiscard]] const std::vector<Index>& row_ptr() const noexcept { return row_ptr_; }
    [[nodiscard]] const std::vector<Index>& col_idx() const noexcept { return col_idx_; }
    [[nodiscard]] const std::vector<Complex>& values() const noexcept { return values_; }

    /// Entry lookup by binary search; zero when not stored.
    [[nodiscard]] Complex at(Index row, Index col) const;

    /// Entries in row-major, then column order.
    [[nodiscard]] std::vector<Triplet> entries() const;

    [[nodiscard]] SparseMatrix conj_transpose() const;
    [[nodiscard]] SparseMatrix scaled(Complex factor) const;

    /// Maximum absolute column sum.
    [[nodiscard]] double norm1() const;
    /// Maximum absolute row sum.
    [[nodiscard]] double norm_inf() const;

    /// y = M x
    void multiply(std::span<const Complex> x, std::span<Complex> y) const;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    Index order_ = 0;
    std::vector<Index> row_ptr_{0};
    std::vector<Index> col_idx_;
    std::vector<Complex> values_;
};

/// Monotone block boundaries 0 = o_0 < o_1 < ... < o_k = n.
class BlockPartition {
public:
    /// Throws InvalidArgument unless offsets start at 0 and strictly increase.
    explicit BlockPartition(std::vector<Index> offsets);

    /// Blocks of `block_size`; the last block is shorter when it does not divide n.
    static BlockPartition uniform(Index n, Index block_size);
    /// One block per index (k = n).
    static BlockPartition point(Index n);
    static BlockPartition single(Index n);

    [[nodiscard]] Index order() const noexcept { return offsets_.back(); }
    [[nodiscard]] Index num_blocks() const noexcept { return offsets_.size() - 1; }
    [[nodiscard]] Index begin(Index block) const noexcept { return offsets_[block]; }
    [[nodiscard]] Index end(Index block) const noexcept { return offsets_[block + 1]; }
    [[nodiscard]] Index size(Index block) const noexcept { return end(block) - begin(block); }
    [[nodiscard]] Index block_of(Index i) const;
    [[nodiscard]] bool equal_sized() const noexcept;
    [[nodiscard]] const std::vector<Index>& offsets() const noexcept { return offsets_; }

    friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

private:
    std::vector<Index> offsets_;
};

/// M = M_D + M_off with M_D holding exactly the entries inside diagonal blocks.
/// Throws PartitionMismatch when the partition does not cover M.
std::pair<SparseMatrix, SparseMatrix> split(const SparseMatrix& m, const BlockPartition& partition);

/// Exact sparse product; results with magnitude below kDropTolerance are dropped.
SparseMatrix sparse_product(const SparseMatrix& a, const SparseMatrix& b);

/// Entrywise a + factor * b.
SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b, Complex factor = 1.0);

Complex trace(const SparseMatrix& a);

/// trace(a * b) without forming the product.
Complex trace_of_product(const SparseMatrix& a, const SparseMatrix& b);

/// True iff ||M - M*||_1 <= tol * ||M||_1.
bool is_hermitian(const SparseMatrix& m, double tol);

}  // namespace zonedet
