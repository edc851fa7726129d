#include "zonedet/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zonedet/error.hpp"
#include "zonedet/sparse_matrix.hpp"

namespace zonedet {

DenseMatrix DenseMatrix::identity(Index n) {
    DenseMatrix d(n, n);
    for (Index i = 0; i < n; ++i) d(i, i) = 1.0;
    return d;
}

DenseMatrix DenseMatrix::from_sparse(const SparseMatrix& m) {
    DenseMatrix d(m.order(), m.order());
    for (Index r = 0; r < m.order(); ++r) {
        auto cols = m.row_cols(r);
        auto vals = m.row_values(r);
        for (Index k = 0; k < cols.size(); ++k) d(r, cols[k]) = vals[k];
    }
    return d;
}

DenseMatrix DenseMatrix::principal_submatrix(const SparseMatrix& m, std::span<const Index> indices) {
    const Index k = indices.size();
    DenseMatrix d(k, k);
    for (Index a = 0; a < k; ++a) {
        auto cols = m.row_cols(indices[a]);
        auto vals = m.row_values(indices[a]);
        // Both lists are sorted, so a merge walk finds the matching columns.
        Index p = 0;
        for (Index b = 0; b < k; ++b) {
            while (p < cols.size() && cols[p] < indices[b]) ++p;
            if (p < cols.size() && cols[p] == indices[b]) d(a, b) = vals[p];
        }
    }
    return d;
}

double DenseMatrix::norm1() const {
    double best = 0.0;
    for (Index c = 0; c < cols_; ++c) {
        double s = 0.0;
        for (Index r = 0; r < rows_; ++r) s += std::abs((*this)(r, c));
        best = std::max(best, s);
    }
    return best;
}

double DenseMatrix::frobenius() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

DenseMatrix DenseMatrix::conj_transpose() const {
    DenseMatrix t(cols_, rows_);
    for (Index r = 0; r < rows_; ++r)
        for (Index c = 0; c < cols_; ++c) t(c, r) = std::conj((*this)(r, c));
    return t;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "dense product shape mismatch");
    DenseMatrix out(a.rows(), b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        auto orow = out.row(i);
        for (Index k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0)) continue;
            auto brow = b.row(k);
            for (Index j = 0; j < b.cols(); ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

LuFactorization::LuFactorization(DenseMatrix a, double pivot_tol) : lu_(std::move(a)) {
    const Index n = lu_.rows();
    if (n != lu_.cols()) throw Error(ErrorCode::DimensionMismatch, "LU of a non-square matrix");
    const double threshold = pivot_tol * lu_.norm1();
    perm_.resize(n);
    for (Index i = 0; i < n; ++i) perm_[i] = i;

    for (Index k = 0; k < n; ++k) {
        Index piv = k;
        double best = std::abs(lu_(k, k));
        for (Index r = k + 1; r < n; ++r) {
            const double v = std::abs(lu_(r, k));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0 || best < threshold) {
            throw Error(ErrorCode::SingularMatrix, "pivot " + std::to_string(k) + " below tolerance", k);
        }
        if (piv != k) {
            std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(piv).begin());
            std::swap(perm_[k], perm_[piv]);
            logdet_.phase += std::numbers::pi;
        }
        const Complex pivot = lu_(k, k);
        logdet_.ln_abs += std::log(std::abs(pivot));
        logdet_.phase += std::arg(pivot);

        auto krow = lu_.row(k);
        for (Index r = k + 1; r < n; ++r) {
            auto rrow = lu_.row(r);
            const Complex l = rrow[k] / pivot;
            rrow[k] = l;
            if (l == Complex(0.0)) continue;
            for (Index c = k + 1; c < n; ++c) rrow[c] -= l * krow[c];
        }
    }
}

void LuFactorization::solve_in_place(DenseMatrix& rhs) const {
    const Index n = order();
    if (rhs.rows() != n) throw Error(ErrorCode::DimensionMismatch, "right-hand side has wrong row count");
    const Index m = rhs.cols();

    DenseMatrix permuted(n, m);
    for (Index i = 0; i < n; ++i) std::copy(rhs.row(perm_[i]).begin(), rhs.row(perm_[i]).end(), permuted.row(i).begin());

    for (Index i = 0; i < n; ++i) {
        auto xi = permuted.row(i);
        for (Index k = 0; k < i; ++k) {
            const Complex l = lu_(i, k);
            if (l == Complex(0.0)) continue;
            auto xk = permuted.row(k);
            for (Index c = 0; c < m; ++c) xi[c] -= l * xk[c];
        }
    }
    for (Index ii = n; ii-- > 0;) {
        auto xi = permuted.row(ii);
        for (Index k = ii + 1; k < n; ++k) {
            const Complex u = lu_(ii, k);
            if (u == Complex(0.0)) continue;
            auto xk = permuted.row(k);
            for (Index c = 0; c < m; ++c) xi[c] -= u * xk[c];
        }
        const Complex d = lu_(ii, ii);
        for (Index c = 0; c < m; ++c) xi[c] /= d;
    }
    rhs = std::move(permuted);
}

DenseMatrix LuFactorization::reconstruct() const {
    const Index n = order();
    DenseMatrix l(n, n), u(n, n);
    for (Index r = 0; r < n; ++r) {
        for (Index c = 0; c < n; ++c) {
            if (c < r) l(r, c) = lu_(r, c);
            else u(r, c) = lu_(r, c);
        }
        l(r, r) = 1.0;
    }
    const DenseMatrix pa = l * u;
    DenseMatrix a(n, n);
    for (Index i = 0; i < n; ++i) std::copy(pa.row(i).begin(), pa.row(i).end(), a.row(perm_[i]).begin());
    return a;
}

}  // namespace zonedet
