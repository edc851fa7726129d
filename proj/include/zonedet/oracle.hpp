#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zonedet/dense.hpp"
#include "zonedet/logdet.hpp"
#include "zonedet/rho.hpp"
#include "zonedet/sparse_matrix.hpp"

namespace zonedet::oracle {

inline constexpr Index kDefaultDenseCap = 4096;

/// Dense size limit; ZONEDET_DENSE_CAP overrides the default.
Index dense_cap();

/// ln det via dense LU with partial pivoting.
/// Throws SingularMatrix, DenseCapExceeded.
LogDet dense_lu_logdet(const SparseMatrix& m, std::optional<Index> cap = std::nullopt);

/// Signed sum over all permutations. Throws OrderTooLarge for n > 10.
Complex leibniz_det(const DenseMatrix& m);

/// Spectral radius from power iteration on A^2 (A^2 keeps +/- paired spectra
/// from cancelling). The largest converged Rayleigh quotient magnitude over
/// `seeds` random complex starts is used; rho = sqrt of it.
RhoEstimate power_iteration_rho(const SparseMatrix& a, int seeds = 4, double tol = 1e-6,
                                int max_iter = 5000, std::uint64_t seed = 0x5eed);

struct HermitianEigen {
    std::vector<double> values;   ///< ascending
    DenseMatrix vectors;          ///< columns, matching `values`; empty unless requested
    int sweeps = 0;
};

/// Cyclic complex Jacobi rotations until the off-diagonal Frobenius norm is
/// at most tol * ||H||_F. Throws NotHermitian.
HermitianEigen jacobi_eigensystem(const DenseMatrix& h, double tol = 1e-14, bool want_vectors = false);

std::vector<double> hermitian_eigs_jacobi(const DenseMatrix& h, double tol = 1e-14);

struct ZoneSpectrum {
    double rho = 0.0;
    double lambda_min = 0.0;
};

/// Extreme eigenvalues of A = M_D^{-1} M_off for Hermitian positive-definite
/// M, computed from the similar Hermitian matrix M_D^{-1/2} M_off M_D^{-1/2}.
/// Throws NotHermitian, NotPositiveDefinite, DenseCapExceeded.
ZoneSpectrum symmetrized_zone_spectrum(const SparseMatrix& m, const BlockPartition& partition);

}  // namespace zonedet::oracle
