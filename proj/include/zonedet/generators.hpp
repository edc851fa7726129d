#pragma once

#include <cstdint>
#include <string>

#include "zonedet/sparse_matrix.hpp"

namespace zonedet::generators {

/// 5-point finite-difference Laplacian on an m x m grid, order m^2.
SparseMatrix laplacian_2d(Index m);
/// Sum of logs of the closed-form eigenvalues 4 (sin^2(i pi / 2(m+1)) + sin^2(j pi / 2(m+1))).
double laplacian_2d_logdet_exact(Index m);

/// Symmetric tridiagonal Toeplitz matrix with diagonal a and off-diagonal b.
SparseMatrix toeplitz_tridiag(Index n, double a, double b);
/// Sum of ln(a + 2 b cos(i pi / (n + 1))). Throws NonPositiveEigenvalue.
double toeplitz_logdet_exact(Index n, double a, double b);

/// Block diagonal with n / 3 copies of tridiag(-1, 3/2, -1) of order 3.
SparseMatrix block_t3(Index n);
double block_t3_logdet_exact(Index n);

/// Bipartite zone matrix with k zones of `block_size`. Diagonal blocks are
/// the identity plus a small non-Hermitian complex perturbation; zone i is
/// coupled to zones i +/- 1, 3, 5 (mod k), always of opposite parity, with
/// one entry per row of magnitude <= coupling_scale. M_off is therefore an
/// odd checkerboard and its row sums are <= 6 * coupling_scale.
SparseMatrix random_checkerboard(Index k, Index block_size, double coupling_scale, std::uint64_t seed);

/// B* B + dominance I with sparse, diagonally dominant complex B, made exactly
/// Hermitian.
SparseMatrix hpd_random(Index n, std::uint64_t seed, double dominance);

/// Complex matrix with |m_ii| - sum_{j != i} |m_ij| = margin in every row.
SparseMatrix diag_dominant_random(Index n, std::uint64_t seed, double margin);

/// [[1, alpha], [alpha, 1]]
SparseMatrix example_2x2(Complex alpha);

enum class Kind { laplacian2d, toeplitz, block_t3, checkerboard, hpd_random, diag_dominant_random, example_2x2 };

/// Parses the CLI spelling of a kind. Throws InvalidArgument.
Kind parse_kind(const std::string& name);
std::string to_string(Kind kind);

struct GeneratorSpec {
    Kind kind = Kind::laplacian2d;
    Index m = 0;
    Index n = 0;
    Index k = 0;
    Index block_size = 0;
    double a = 2.0;
    double b = -1.0;
    double coupling_scale = 0.0;
    double dominance = 0.0;
    double margin = 0.0;
    Complex alpha{};
    std::uint64_t seed = 0;

    /// Parameters that matter for this kind, e.g. "laplacian2d m=30".
    [[nodiscard]] std::string describe() const;
};

/// Throws InvalidArgument for missing or inconsistent parameters.
SparseMatrix generate(const GeneratorSpec& spec);

/// Parses "a+bi", "a-bi", "bi", "a" (optional signs, exponents allowed).
/// Throws InvalidArgument.
Complex parse_complex(const std::string& text);

}  // namespace zonedet::generators
