#include "zonedet/spai.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zonedet/dense.hpp"
#include "zonedet/error.hpp"

namespace zonedet {

void SpaiPattern::validate() const {
    for (Index i = 0; i < sets.size(); ++i) {
        const auto& s = sets[i];
        if (s.empty() || s.back() != i) {
            throw Error(ErrorCode::InvalidArgument, "pattern set " + std::to_string(i) + " must end with its own index", i);
        }
        for (Index k = 1; k < s.size(); ++k) {
            if (s[k] <= s[k - 1]) {
                throw Error(ErrorCode::InvalidArgument, "pattern set " + std::to_string(i) + " is not strictly ascending", i);
            }
        }
    }
}

SpaiPattern SpaiPattern::diagonal(Index n) {
    SpaiPattern p;
    p.sets.resize(n);
    for (Index i = 0; i < n; ++i) p.sets[i] = {i};
    return p;
}

SpaiPattern SpaiPattern::full_lower(Index n) {
    SpaiPattern p;
    p.sets.resize(n);
    for (Index i = 0; i < n; ++i) {
        p.sets[i].resize(i + 1);
        for (Index j = 0; j <= i; ++j) p.sets[i][j] = j;
    }
    return p;
}

SpaiPattern lower_neighbor_pattern(const SparseMatrix& m, int level, Index cap) {
    if (level < 1) throw Error(ErrorCode::InvalidArgument, "pattern level must be >= 1");
    if (cap < 1) throw Error(ErrorCode::InvalidArgument, "pattern cap must be >= 1");
    if (!is_hermitian(m, 1e-10)) throw Error(ErrorCode::NotHermitian, "SPAI patterns need a Hermitian matrix");

    const Index n = m.order();
    SpaiPattern pattern;
    pattern.sets.resize(n);
    std::vector<int> depth(n, -1);
    std::vector<Index> frontier, next, visited;

    for (Index i = 0; i < n; ++i) {
        visited.assign({i});
        frontier.assign({i});
        depth[i] = 0;
        for (int d = 1; d <= level && !frontier.empty(); ++d) {
            next.clear();
            for (Index u : frontier) {
                for (Index v : m.row_cols(u)) {
                    if (v > i) break;
                    if (depth[v] >= 0) continue;
                    depth[v] = d;
                    visited.push_back(v);
                    next.push_back(v);
                }
            }
            frontier.swap(next);
        }
        for (Index v : visited) depth[v] = -1;
        std::sort(visited.begin(), visited.end());
        if (visited.size() > cap) visited.erase(visited.begin(), visited.end() - static_cast<std::ptrdiff_t>(cap));
        pattern.sets[i] = visited;
    }
    return pattern;
}

namespace {

/// Trailing squared pivot of the Cholesky factor of a Hermitian block,
/// i.e. 1 / (S^{-1})_{nn}. Returns a non-positive value on breakdown.
double trailing_squared_pivot(DenseMatrix s) {
    const Index k = s.rows();
    for (Index j = 0; j < k; ++j) {
        double d = s(j, j).real();
        for (Index p = 0; p < j; ++p) d -= std::norm(s(j, p));
        if (!(d > 0.0) || !std::isfinite(d)) return d;
        if (j + 1 == k) return d;
        const double ljj = std::sqrt(d);
        s(j, j) = ljj;
        for (Index r = j + 1; r < k; ++r) {
            Complex v = s(r, j);
            for (Index p = 0; p < j; ++p) v -= s(r, p) * std::conj(s(j, p));
            s(r, j) = v / ljj;
        }
    }
    return 0.0;
}

}  // namespace

SpaiResult spai_logdet(const SparseMatrix& m, const SpaiPattern& pattern) {
    const Index n = m.order();
    if (pattern.sets.size() != n) throw Error(ErrorCode::DimensionMismatch, "pattern has wrong number of sets");
    pattern.validate();
    if (!is_hermitian(m, 1e-10)) throw Error(ErrorCode::NotHermitian, "sparse inverse approximation needs a Hermitian matrix");

    SpaiResult out;
    out.sigmas.reserve(n);
    out.pattern_sizes.reserve(n);
    for (Index i = 0; i < n; ++i) {
        const auto& set = pattern.sets[i];
        const double pivot = trailing_squared_pivot(DenseMatrix::principal_submatrix(m, set));
        if (!(pivot > 0.0) || !std::isfinite(pivot)) {
            throw Error(ErrorCode::CholeskyBreakdown,
                        "Cholesky breakdown on the submatrix of row " + std::to_string(i + 1), i);
        }
        out.sigmas.push_back(1.0 / pivot);
        out.pattern_sizes.push_back(set.size());
        out.logdet.ln_abs += std::log(pivot);
    }
    return out;
}

HadamardResult hadamard_product_logdet(const SparseMatrix& m) {
    HadamardResult out;
    for (Index i = 0; i < m.order(); ++i) {
        const Complex d = m.at(i, i);
        if (d == Complex(0.0)) throw Error(ErrorCode::ZeroDiagonal, "zero diagonal entry in row " + std::to_string(i), i);
        out.logdet.ln_abs += std::log(std::abs(d));
        out.logdet.phase += std::arg(d);
        if (d.imag() != 0.0 || d.real() <= 0.0) out.nonpositive_diagonal = true;
    }
    return out;
}

}  // namespace zonedet
