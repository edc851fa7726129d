#include "zonedet/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "zonedet/error.hpp"

namespace zonedet {

namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

SparseMatrix SparseMatrix::from_entries(Index n, std::span<const Triplet> triplets) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "matrix order must be positive");

    std::vector<Triplet> sorted(triplets.begin(), triplets.end());
    for (const auto& t : sorted) {
        if (t.row >= n || t.col >= n) {
            throw Error(ErrorCode::IndexOutOfRange, "entry (" + std::to_string(t.row) + ", " +
                                                        std::to_string(t.col) + ") outside order " +
                                                        std::to_string(n));
        }
        if (!is_finite(t.value)) throw Error(ErrorCode::NonFiniteValue, "non-finite entry value");
    }
    std::stable_sort(sorted.begin(), sorted.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SparseMatrix m;
    m.order_ = n;
    m.row_ptr_.assign(n + 1, 0);
    m.col_idx_.reserve(sorted.size());
    m.values_.reserve(sorted.size());

    for (Index i = 0; i < sorted.size();) {
        const Index r = sorted[i].row;
        const Index c = sorted[i].col;
        Complex sum = 0.0;
        for (; i < sorted.size() && sorted[i].row == r && sorted[i].col == c; ++i) sum += sorted[i].value;
        if (!is_finite(sum)) throw Error(ErrorCode::NonFiniteValue, "duplicate summation overflowed");
        if (sum == Complex(0.0)) continue;
        m.col_idx_.push_back(c);
        m.values_.push_back(sum);
        ++m.row_ptr_[r + 1];
    }
    std::partial_sum(m.row_ptr_.begin(), m.row_ptr_.end(), m.row_ptr_.begin());
    return m;
}

SparseMatrix SparseMatrix::from_csr(Index n, std::vector<Index> row_ptr, std::vector<Index> col_idx,
                                    std::vector<Complex> values) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "matrix order must be positive");
    if (row_ptr.size() != n + 1 || row_ptr.front() != 0 || row_ptr.back() != col_idx.size() ||
        col_idx.size() != values.size()) {
        throw Error(ErrorCode::InvalidArgument, "inconsistent CSR arrays");
    }
    SparseMatrix m;
    m.order_ = n;
    m.row_ptr_ = std::move(row_ptr);
    m.col_idx_ = std::move(col_idx);
    m.values_ = std::move(values);
    return m;
}

SparseMatrix SparseMatrix::identity(Index n) {
    std::vector<Index> ptr(n + 1);
    std::iota(ptr.begin(), ptr.end(), Index{0});
    std::vector<Index> cols(n);
    std::iota(cols.begin(), cols.end(), Index{0});
    return from_csr(n, std::move(ptr), std::move(cols), std::vector<Complex>(n, 1.0));
}

SparseMatrix SparseMatrix::zero(Index n) { return from_csr(n, std::vector<Index>(n + 1, 0), {}, {}); }

Complex SparseMatrix::at(Index row, Index col) const {
    if (row >= order_ || col >= order_) throw Error(ErrorCode::IndexOutOfRange, "at() outside matrix");
    auto cols = row_cols(row);
    auto it = std::lower_bound(cols.begin(), cols.end(), col);
    if (it == cols.end() || *it != col) return 0.0;
    return row_values(row)[static_cast<Index>(it - cols.begin())];
}

std::vector<Triplet> SparseMatrix::entries() const {
    std::vector<Triplet> out;
    out.reserve(nnz());
    for (Index r = 0; r < order_; ++r) {
        for (Index k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) out.push_back({r, col_idx_[k], values_[k]});
    }
    return out;
}

SparseMatrix SparseMatrix::conj_transpose() const {
    std::vector<Index> ptr(order_ + 1, 0);
    for (Index c : col_idx_) ++ptr[c + 1];
    std::partial_sum(ptr.begin(), ptr.end(), ptr.begin());
    std::vector<Index> cols(nnz());
    std::vector<Complex> vals(nnz());
    std::vector<Index> next(ptr.begin(), ptr.end() - 1);
    for (Index r = 0; r < order_; ++r) {
        for (Index k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            const Index dst = next[col_idx_[k]]++;
            cols[dst] = r;
            vals[dst] = std::conj(values_[k]);
        }
    }
    return from_csr(order_, std::move(ptr), std::move(cols), std::move(vals));
}

SparseMatrix SparseMatrix::scaled(Complex factor) const {
    if (factor == Complex(0.0)) return zero(order_);
    SparseMatrix out = *this;
    for (auto& v : out.values_) v *= factor;
    return out;
}

double SparseMatrix::norm1() const {
    std::vector<double> sums(order_, 0.0);
    for (Index k = 0; k < nnz(); ++k) sums[col_idx_[k]] += std::abs(values_[k]);
    return sums.empty() ? 0.0 : *std::max_element(sums.begin(), sums.end());
}

double SparseMatrix::norm_inf() const {
    double best = 0.0;
    for (Index r = 0; r < order_; ++r) {
        double s = 0.0;
        for (const auto& v : row_values(r)) s += std::abs(v);
        best = std::max(best, s);
    }
    return best;
}

void SparseMatrix::multiply(std::span<const Complex> x, std::span<Complex> y) const {
    if (x.size() != order_ || y.size() != order_) {
        throw Error(ErrorCode::DimensionMismatch, "vector length does not match matrix order");
    }
    for (Index r = 0; r < order_; ++r) {
        Complex s = 0.0;
        for (Index k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) s += values_[k] * x[col_idx_[k]];
        y[r] = s;
    }
}

BlockPartition::BlockPartition(std::vector<Index> offsets) : offsets_(std::move(offsets)) {
    if (offsets_.size() < 2 || offsets_.front() != 0) {
        throw Error(ErrorCode::InvalidArgument, "block offsets must start at 0 and contain at least one block");
    }
    for (Index i = 1; i < offsets_.size(); ++i) {
        if (offsets_[i] <= offsets_[i - 1]) {
            throw Error(ErrorCode::InvalidArgument, "block offsets must be strictly increasing");
        }
    }
}

BlockPartition BlockPartition::uniform(Index n, Index block_size) {
    if (n == 0 || block_size == 0) throw Error(ErrorCode::InvalidArgument, "empty uniform partition");
    std::vector<Index> offsets;
    for (Index o = 0; o < n; o += block_size) offsets.push_back(o);
    offsets.push_back(n);
    return BlockPartition(std::move(offsets));
}

BlockPartition BlockPartition::point(Index n) { return uniform(n, 1); }

BlockPartition BlockPartition::single(Index n) { return BlockPartition({0, n}); }

Index BlockPartition::block_of(Index i) const {
    if (i >= order()) throw Error(ErrorCode::IndexOutOfRange, "index outside partition");
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), i);
    return static_cast<Index>(it - offsets_.begin()) - 1;
}

bool BlockPartition::equal_sized() const noexcept {
    for (Index b = 1; b < num_blocks(); ++b) {
        if (size(b) != size(0)) return false;
    }
    return true;
}

std::pair<SparseMatrix, SparseMatrix> split(const SparseMatrix& m, const BlockPartition& partition) {
    if (partition.order() != m.order()) {
        throw Error(ErrorCode::PartitionMismatch, "partition covers " + std::to_string(partition.order()) +
                                                      " indices, matrix has order " + std::to_string(m.order()));
    }
    const Index n = m.order();
    std::vector<Index> dptr(n + 1, 0), optr(n + 1, 0);
    std::vector<Index> dcols, ocols;
    std::vector<Complex> dvals, ovals;
    for (Index r = 0; r < n; ++r) {
        const Index block = partition.block_of(r);
        const Index lo = partition.begin(block);
        const Index hi = partition.end(block);
        auto cols = m.row_cols(r);
        auto vals = m.row_values(r);
        for (Index k = 0; k < cols.size(); ++k) {
            if (cols[k] >= lo && cols[k] < hi) {
                dcols.push_back(cols[k]);
                dvals.push_back(vals[k]);
            } else {
                ocols.push_back(cols[k]);
                ovals.push_back(vals[k]);
            }
        }
        dptr[r + 1] = dcols.size();
        optr[r + 1] = ocols.size();
    }
    return {SparseMatrix::from_csr(n, std::move(dptr), std::move(dcols), std::move(dvals)),
            SparseMatrix::from_csr(n, std::move(optr), std::move(ocols), std::move(ovals))};
}

SparseMatrix sparse_product(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.order() != b.order()) throw Error(ErrorCode::DimensionMismatch, "product of unequal orders");
    const Index n = a.order();

    // Gustavson row-by-row product with a dense accumulator.
    std::vector<Complex> acc(n, 0.0);
    std::vector<char> used(n, 0);
    std::vector<Index> touched;
    std::vector<Index> ptr(n + 1, 0);
    std::vector<Index> cols;
    std::vector<Complex> vals;

    for (Index r = 0; r < n; ++r) {
        touched.clear();
        auto acols = a.row_cols(r);
        auto avals = a.row_values(r);
        for (Index k = 0; k < acols.size(); ++k) {
            const Complex av = avals[k];
            auto bcols = b.row_cols(acols[k]);
            auto bvals = b.row_values(acols[k]);
            for (Index j = 0; j < bcols.size(); ++j) {
                const Index c = bcols[j];
                if (!used[c]) {
                    used[c] = 1;
                    touched.push_back(c);
                }
                acc[c] += av * bvals[j];
            }
        }
        std::sort(touched.begin(), touched.end());
        for (Index c : touched) {
            if (std::abs(acc[c]) >= kDropTolerance) {
                cols.push_back(c);
                vals.push_back(acc[c]);
            }
            acc[c] = 0.0;
            used[c] = 0;
        }
        ptr[r + 1] = cols.size();
    }
    return SparseMatrix::from_csr(n, std::move(ptr), std::move(cols), std::move(vals));
}

SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b, Complex factor) {
    if (a.order() != b.order()) throw Error(ErrorCode::DimensionMismatch, "sum of unequal orders");
    std::vector<Triplet> t = a.entries();
    for (auto e : b.entries()) {
        e.value *= factor;
        t.push_back(e);
    }
    return SparseMatrix::from_entries(a.order(), t);
}

Complex trace(const SparseMatrix& a) {
    Complex s = 0.0;
    for (Index r = 0; r < a.order(); ++r) s += a.at(r, r);
    return s;
}

Complex trace_of_product(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.order() != b.order()) throw Error(ErrorCode::DimensionMismatch, "trace of unequal orders");
    // trace(AB) = sum_i sum_k a_ik b_ki
    Complex s = 0.0;
    for (Index i = 0; i < a.order(); ++i) {
        auto cols = a.row_cols(i);
        auto vals = a.row_values(i);
        Complex row_sum = 0.0;
        for (Index k = 0; k < cols.size(); ++k) row_sum += vals[k] * b.at(cols[k], i);
        s += row_sum;
    }
    return s;
}

bool is_hermitian(const SparseMatrix& m, double tol) {
    const SparseMatrix diff = add(m, m.conj_transpose(), -1.0);
    return diff.norm1() <= tol * m.norm1();
}

}  // namespace zonedet
