#include "zonedet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "zonedet/error.hpp"
#include "zonedet/rng.hpp"

namespace zonedet::oracle {

Index dense_cap() {
    if (const char* env = std::getenv("ZONEDET_DENSE_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<Index>(v);
    }
    return kDefaultDenseCap;
}

namespace {

void check_cap(Index n, std::optional<Index> cap) {
    const Index limit = cap.value_or(dense_cap());
    if (n > limit) {
        throw Error(ErrorCode::DenseCapExceeded,
                    "order " + std::to_string(n) + " exceeds dense cap " + std::to_string(limit));
    }
}

}  // namespace

LogDet dense_lu_logdet(const SparseMatrix& m, std::optional<Index> cap) {
    check_cap(m.order(), cap);
    // Exact zero pivots only; the oracle should not second-guess conditioning.
    return LuFactorization(DenseMatrix::from_sparse(m), 0.0).logdet();
}

Complex leibniz_det(const DenseMatrix& m) {
    const Index n = m.rows();
    if (n != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    if (n > 10) throw Error(ErrorCode::OrderTooLarge, "Leibniz expansion limited to order 10");
    if (n == 0) return 1.0;

    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), Index{0});
    Complex det = 0.0;
    do {
        Index inversions = 0;
        for (Index i = 0; i < n; ++i)
            for (Index j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        Complex term = inversions % 2 ? -1.0 : 1.0;
        for (Index i = 0; i < n && term != Complex(0.0); ++i) term *= m(i, perm[i]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

RhoEstimate power_iteration_rho(const SparseMatrix& a, int seeds, double tol, int max_iter, std::uint64_t seed) {
    const Index n = a.order();
    RhoEstimate best{0.0, RhoMethod::power_iteration, false, 0};
    bool have_converged = false;
    double best_mu = 0.0;

    std::vector<Complex> x(n), y(n), z(n);
    auto normalize = [](std::vector<Complex>& v) {
        double s = 0.0;
        for (const auto& e : v) s += std::norm(e);
        s = std::sqrt(s);
        if (s > 0.0)
            for (auto& e : v) e /= s;
        return s;
    };

    for (int s = 0; s < std::max(seeds, 1); ++s) {
        SplitMix64 rng(seed + static_cast<std::uint64_t>(s) * 0x9E3779B97F4A7C15ULL);
        for (auto& e : x) e = rng.complex_unit_box();
        normalize(x);

        double mu = 0.0;
        bool converged = false;
        int it = 0;
        for (it = 1; it <= max_iter; ++it) {
            a.multiply(x, y);
            a.multiply(y, z);
            // x is unit length, so x* A^2 x is the Rayleigh quotient.
            Complex rq = 0.0;
            for (Index i = 0; i < n; ++i) rq += std::conj(x[i]) * z[i];
            const double mu_new = std::abs(rq);
            const double znorm = normalize(z);
            if (znorm == 0.0) {
                mu = 0.0;
                converged = true;
                break;
            }
            x.swap(z);
            if (it > 1 && std::abs(mu_new - mu) <= tol * mu_new) {
                mu = mu_new;
                converged = true;
                break;
            }
            mu = mu_new;
        }
        it = std::min(it, max_iter);

        if (converged && (!have_converged || mu > best_mu)) {
            have_converged = true;
            best_mu = mu;
            best = {std::sqrt(mu), RhoMethod::power_iteration, true, it};
        } else if (!have_converged && mu >= best_mu) {
            best_mu = mu;
            best = {std::sqrt(mu), RhoMethod::power_iteration, false, it};
        }
    }
    return best;
}

HermitianEigen jacobi_eigensystem(const DenseMatrix& h_in, double tol, bool want_vectors) {
    const Index n = h_in.rows();
    if (n != h_in.cols()) throw Error(ErrorCode::DimensionMismatch, "eigenvalues of a non-square matrix");
    const double fro = h_in.frobenius();
    {
        double skew = 0.0;
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) skew += std::norm(h_in(i, j) - std::conj(h_in(j, i)));
        if (std::sqrt(skew) > 1e-10 * std::max(fro, 1e-300)) {
            throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian within 1e-10");
        }
    }

    DenseMatrix h = h_in;
    for (Index i = 0; i < n; ++i) h(i, i) = h(i, i).real();
    DenseMatrix v = want_vectors ? DenseMatrix::identity(n) : DenseMatrix();

    auto off_norm = [&] {
        double s = 0.0;
        for (Index i = 0; i < n; ++i)
            for (Index j = i + 1; j < n; ++j) s += 2.0 * std::norm(h(i, j));
        return std::sqrt(s);
    };

    HermitianEigen result;
    constexpr int kMaxSweeps = 100;
    const double target = tol * fro;
    for (int sweep = 0; sweep < kMaxSweeps && off_norm() > target; ++sweep) {
        result.sweeps = sweep + 1;
        for (Index p = 0; p < n; ++p) {
            for (Index q = p + 1; q < n; ++q) {
                const Complex hpq = h(p, q);
                const double mag = std::abs(hpq);
                if (mag == 0.0) continue;
                // J = diag(1, conj(u)) * [[c, s], [-s, c]] on (p, q), with u the
                // phase of h_pq; the inner 2x2 problem is then real symmetric.
                const Complex u = hpq / mag;
                const double hpp = h(p, p).real();
                const double hqq = h(q, q).real();
                const double theta = (hqq - hpp) / (2.0 * mag);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex jpp = c, jpq = s, jqp = -s * std::conj(u), jqq = c * std::conj(u);

                for (Index k = 0; k < n; ++k) {
                    const Complex hkp = h(k, p), hkq = h(k, q);
                    h(k, p) = hkp * jpp + hkq * jqp;
                    h(k, q) = hkp * jpq + hkq * jqq;
                }
                for (Index k = 0; k < n; ++k) {
                    const Complex hpk = h(p, k), hqk = h(q, k);
                    h(p, k) = std::conj(jpp) * hpk + std::conj(jqp) * hqk;
                    h(q, k) = std::conj(jpq) * hpk + std::conj(jqq) * hqk;
                }
                h(p, q) = 0.0;
                h(q, p) = 0.0;
                h(p, p) = h(p, p).real();
                h(q, q) = h(q, q).real();
                if (want_vectors) {
                    for (Index k = 0; k < n; ++k) {
                        const Complex vkp = v(k, p), vkq = v(k, q);
                        v(k, p) = vkp * jpp + vkq * jqp;
                        v(k, q) = vkp * jpq + vkq * jqq;
                    }
                }
            }
        }
    }

    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(), [&](Index a, Index b) { return h(a, a).real() < h(b, b).real(); });
    result.values.resize(n);
    for (Index i = 0; i < n; ++i) result.values[i] = h(order[i], order[i]).real();
    if (want_vectors) {
        result.vectors = DenseMatrix(n, n);
        for (Index j = 0; j < n; ++j)
            for (Index k = 0; k < n; ++k) result.vectors(k, j) = v(k, order[j]);
    }
    return result;
}

std::vector<double> hermitian_eigs_jacobi(const DenseMatrix& h, double tol) {
    return jacobi_eigensystem(h, tol, false).values;
}

ZoneSpectrum symmetrized_zone_spectrum(const SparseMatrix& m, const BlockPartition& partition) {
    const Index n = m.order();
    if (partition.order() != n) throw Error(ErrorCode::PartitionMismatch, "partition does not match matrix order");
    check_cap(n, std::nullopt);

    const DenseMatrix full = DenseMatrix::from_sparse(m);
    {
        double skew = 0.0;
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) skew += std::abs(full(i, j) - std::conj(full(j, i)));
        if (skew > 1e-10 * std::max(full.norm1(), 1e-300) * static_cast<double>(n)) {
            throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian");
        }
    }

    // W_b = M_bb^{-1/2} from each block's eigendecomposition.
    std::vector<DenseMatrix> inv_sqrt;
    inv_sqrt.reserve(partition.num_blocks());
    for (Index b = 0; b < partition.num_blocks(); ++b) {
        const Index lo = partition.begin(b), sz = partition.size(b);
        DenseMatrix block(sz, sz);
        for (Index i = 0; i < sz; ++i)
            for (Index j = 0; j < sz; ++j) block(i, j) = full(lo + i, lo + j);
        auto eig = jacobi_eigensystem(block, 1e-15, true);
        if (eig.values.front() <= 0.0) {
            throw Error(ErrorCode::NotPositiveDefinite, "diagonal block " + std::to_string(b) + " is not positive-definite", b);
        }
        DenseMatrix scaled = eig.vectors;
        for (Index i = 0; i < sz; ++i)
            for (Index j = 0; j < sz; ++j) scaled(i, j) /= std::sqrt(eig.values[j]);
        inv_sqrt.push_back(scaled * eig.vectors.conj_transpose());
    }

    // S = W M_off W, assembled block by block; diagonal blocks of S stay zero.
    DenseMatrix sym(n, n);
    DenseMatrix left(0, 0);
    for (Index bi = 0; bi < partition.num_blocks(); ++bi) {
        const Index lo_i = partition.begin(bi), sz_i = partition.size(bi);
        for (Index bj = 0; bj < partition.num_blocks(); ++bj) {
            if (bi == bj) continue;
            const Index lo_j = partition.begin(bj), sz_j = partition.size(bj);
            DenseMatrix off(sz_i, sz_j);
            bool any = false;
            for (Index i = 0; i < sz_i; ++i)
                for (Index j = 0; j < sz_j; ++j) {
                    off(i, j) = full(lo_i + i, lo_j + j);
                    any = any || off(i, j) != Complex(0.0);
                }
            if (!any) continue;
            const DenseMatrix s = inv_sqrt[bi] * off * inv_sqrt[bj];
            for (Index i = 0; i < sz_i; ++i)
                for (Index j = 0; j < sz_j; ++j) sym(lo_i + i, lo_j + j) = s(i, j);
        }
    }
    // Restore exact Hermitian symmetry lost to rounding in the triple products.
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (sym(i, j) + std::conj(sym(j, i)));
            sym(i, j) = avg;
            sym(j, i) = std::conj(avg);
        }

    const auto values = hermitian_eigs_jacobi(sym, 1e-14);
    ZoneSpectrum out;
    out.lambda_min = values.front();
    out.rho = std::max(std::abs(values.front()), std::abs(values.back()));
    return out;
}

}  // namespace zonedet::oracle
