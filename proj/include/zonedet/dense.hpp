#pragma once

#include <span>
#include <vector>

#include "zonedet/logdet.hpp"
#include "zonedet/types.hpp"

namespace zonedet {

class SparseMatrix;

/// Row-major dense complex matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(Index rows, Index cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DenseMatrix identity(Index n);
    static DenseMatrix from_sparse(const SparseMatrix& m);
    /// Dense copy of the principal submatrix m[indices, indices].
    static DenseMatrix principal_submatrix(const SparseMatrix& m, std::span<const Index> indices);

    [[nodiscard]] Index rows() const noexcept { return rows_; }
    [[nodiscard]] Index cols() const noexcept { return cols_; }

    Complex& operator()(Index r, Index c) noexcept { return data_[r * cols_ + c]; }
    const Complex& operator()(Index r, Index c) const noexcept { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<Complex> row(Index r) noexcept { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::span<const Complex> row(Index r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }

    [[nodiscard]] double norm1() const;
    [[nodiscard]] double frobenius() const;
    [[nodiscard]] DenseMatrix conj_transpose() const;

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<Complex> data_;
};

/// LU factorization with partial pivoting, P A = L U, L unit lower.
class LuFactorization {
public:
    /// Throws SingularMatrix when a pivot magnitude falls below
    /// pivot_tol * ||A||_1 (exactly-zero pivots are always singular).
    LuFactorization(DenseMatrix a, double pivot_tol);

    [[nodiscard]] Index order() const noexcept { return lu_.rows(); }
    /// Sum of log pivots; each row swap adds pi to the phase.
    [[nodiscard]] const LogDet& logdet() const noexcept { return logdet_; }
    [[nodiscard]] const DenseMatrix& packed() const noexcept { return lu_; }
    [[nodiscard]] const std::vector<Index>& permutation() const noexcept { return perm_; }

    /// Overwrites rhs (order x any) with A^{-1} rhs.
    void solve_in_place(DenseMatrix& rhs) const;

    /// P^T L U, for reconstruction checks.
    [[nodiscard]] DenseMatrix reconstruct() const;

private:
    DenseMatrix lu_;
    std::vector<Index> perm_;
    LogDet logdet_;
};

}  // namespace zonedet
