#pragma once

#include <vector>

#include "zonedet/logdet.hpp"
#include "zonedet/sparse_matrix.hpp"

namespace zonedet {

/// One ascending index set S_i per row i, each drawn from {0..i} and ending in i.
struct SpaiPattern {
    std::vector<std::vector<Index>> sets;

    /// Throws InvalidArgument when a set is unsorted, leaves {0..i}, or misses i.
    void validate() const;

    static SpaiPattern diagonal(Index n);
    /// S_i = {0..i}; reproduces det M exactly.
    static SpaiPattern full_lower(Index n);
};

inline constexpr Index kDefaultPatternCap = 64;

/// Level-l neighbourhood of i in the adjacency graph of M restricted to
/// {0..i}, keeping the `cap` largest indices. Level 1 is the lower part of
/// row i plus i itself. Throws NotHermitian (tol 1e-10), InvalidArgument.
SpaiPattern lower_neighbor_pattern(const SparseMatrix& m, int level = 1, Index cap = kDefaultPatternCap);

struct SpaiResult {
    std::vector<double> sigmas;         ///< sigma_i = (S_i^{-1})_{n_i n_i}
    LogDet logdet;                      ///< ln prod 1 / sigma_i
    std::vector<Index> pattern_sizes;
};

/// sigma = prod 1 / sigma_i where 1 / sigma_i is the squared trailing
/// Cholesky pivot of M[S_i, S_i].
/// Throws CholeskyBreakdown (index = row), NotHermitian.
SpaiResult spai_logdet(const SparseMatrix& m, const SpaiPattern& pattern);

struct HadamardResult {
    LogDet logdet;                      ///< sum ln m_ii
    bool nonpositive_diagonal = false;  ///< some m_ii is not real positive
};

/// Throws ZeroDiagonal.
HadamardResult hadamard_product_logdet(const SparseMatrix& m);

}  // namespace zonedet
