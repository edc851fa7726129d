#pragma once

#include <cmath>
#include <vector>

#include "zonedet/rng.hpp"
#include "zonedet/sparse_matrix.hpp"

namespace zonedet::test {

/// Random sparse matrix with about `per_row` off-diagonal entries per row and
/// a diagonal shifted by `shift`.
inline SparseMatrix random_sparse(Index n, std::uint64_t seed, Index per_row = 2, double shift = 0.0) {
    SplitMix64 rng(seed);
    std::vector<Triplet> t;
    for (Index i = 0; i < n; ++i) {
        t.push_back({i, i, rng.complex_unit_box() + shift});
        for (Index k = 0; k < per_row; ++k) t.push_back({i, rng.below(n), rng.complex_unit_box()});
    }
    return SparseMatrix::from_entries(n, t);
}

inline bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace zonedet::test
