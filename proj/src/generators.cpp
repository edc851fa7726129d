#include "zonedet/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <vector>

#include "zonedet/error.hpp"
#include "zonedet/rng.hpp"

namespace zonedet::generators {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

std::string fmt(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string fmt(Complex z) {
    std::string s = fmt(z.real());
    s += z.imag() < 0 || std::signbit(z.imag()) ? "-" : "+";
    s += fmt(std::abs(z.imag()));
    s += "i";
    return s;
}

}  // namespace

SparseMatrix laplacian_2d(Index m) {
    require(m >= 2, "laplacian2d needs m >= 2");
    const Index n = m * m;
    std::vector<Triplet> t;
    t.reserve(5 * n);
    for (Index y = 0; y < m; ++y) {
        for (Index x = 0; x < m; ++x) {
            const Index i = y * m + x;
            if (y > 0) t.push_back({i, i - m, -1.0});
            if (x > 0) t.push_back({i, i - 1, -1.0});
            t.push_back({i, i, 4.0});
            if (x + 1 < m) t.push_back({i, i + 1, -1.0});
            if (y + 1 < m) t.push_back({i, i + m, -1.0});
        }
    }
    return SparseMatrix::from_entries(n, t);
}

double laplacian_2d_logdet_exact(Index m) {
    require(m >= 2, "laplacian2d needs m >= 2");
    std::vector<double> s(m);
    for (Index i = 0; i < m; ++i) {
        const double v = std::sin(static_cast<double>(i + 1) * std::numbers::pi / (2.0 * static_cast<double>(m + 1)));
        s[i] = v * v;
    }
    double total = 0.0;
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j) total += std::log(4.0 * (s[i] + s[j]));
    return total;
}

SparseMatrix toeplitz_tridiag(Index n, double a, double b) {
    require(n >= 1, "toeplitz needs n >= 1");
    std::vector<Triplet> t;
    for (Index i = 0; i < n; ++i) {
        if (i > 0) t.push_back({i, i - 1, b});
        t.push_back({i, i, a});
        if (i + 1 < n) t.push_back({i, i + 1, b});
    }
    return SparseMatrix::from_entries(n, t);
}

double toeplitz_logdet_exact(Index n, double a, double b) {
    require(n >= 1, "toeplitz needs n >= 1");
    double total = 0.0;
    for (Index i = 1; i <= n; ++i) {
        const double lambda = a + 2.0 * b * std::cos(static_cast<double>(i) * std::numbers::pi / static_cast<double>(n + 1));
        if (!(lambda > 0.0)) {
            throw Error(ErrorCode::NonPositiveEigenvalue, "eigenvalue " + std::to_string(i) + " is not positive", i);
        }
        total += std::log(lambda);
    }
    return total;
}

SparseMatrix block_t3(Index n) {
    require(n >= 3 && n % 3 == 0, "block_t3 needs a positive multiple of 3");
    std::vector<Triplet> t;
    for (Index base = 0; base < n; base += 3) {
        for (Index r = 0; r < 3; ++r) {
            t.push_back({base + r, base + r, 1.5});
            if (r > 0) t.push_back({base + r, base + r - 1, -1.0});
            if (r < 2) t.push_back({base + r, base + r + 1, -1.0});
        }
    }
    return SparseMatrix::from_entries(n, t);
}

double block_t3_logdet_exact(Index n) {
    require(n >= 3 && n % 3 == 0, "block_t3 needs a positive multiple of 3");
    return static_cast<double>(n / 3) * std::log(3.0 / 8.0);
}

SparseMatrix random_checkerboard(Index k, Index block_size, double coupling_scale, std::uint64_t seed) {
    require(k >= 2 && k % 2 == 0, "checkerboard needs an even zone count k >= 2");
    require(block_size >= 1, "checkerboard needs block_size >= 1");
    require(coupling_scale >= 0.0, "coupling scale must be non-negative");

    SplitMix64 rng(seed);
    const Index n = k * block_size;
    std::vector<Triplet> t;
    t.reserve(n * 9);

    // Zone diagonal blocks: I plus a small non-Hermitian perturbation.
    for (Index z = 0; z < k; ++z) {
        const Index base = z * block_size;
        for (Index r = 0; r < block_size; ++r) {
            t.push_back({base + r, base + r, 1.0 + 0.05 * rng.complex_unit_box()});
            if (block_size > 1) {
                for (int e = 0; e < 2; ++e) {
                    const Index c = rng.below(block_size);
                    t.push_back({base + r, base + c, 0.05 * rng.complex_unit_box()});
                }
            }
        }
    }

    // Odd offsets keep every coupling between zones of opposite parity.
    for (Index z = 0; z < k; ++z) {
        std::vector<Index> neighbours;
        for (Index off : {1, 3, 5}) {
            if (off >= k) continue;
            neighbours.push_back((z + off) % k);
            neighbours.push_back((z + k - off) % k);
        }
        std::sort(neighbours.begin(), neighbours.end());
        neighbours.erase(std::unique(neighbours.begin(), neighbours.end()), neighbours.end());
        for (Index nz : neighbours) {
            for (Index r = 0; r < block_size; ++r) {
                const Index c = rng.below(block_size);
                const double mag = coupling_scale * rng.uniform(0.5, 1.0);
                const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
                t.push_back({z * block_size + r, nz * block_size + c, std::polar(mag, angle)});
            }
        }
    }
    return SparseMatrix::from_entries(n, t);
}

SparseMatrix hpd_random(Index n, std::uint64_t seed, double dominance) {
    require(n >= 1, "hpd_random needs n >= 1");
    require(dominance >= 0.0, "dominance must be non-negative");
    SplitMix64 rng(seed);
    std::vector<Triplet> t;
    for (Index i = 0; i < n; ++i) {
        t.push_back({i, i, std::polar(rng.uniform(1.0, 2.0), rng.uniform(0.0, 2.0 * std::numbers::pi))});
        if (n == 1) continue;
        for (int e = 0; e < 2; ++e) {
            Index c = rng.below(n - 1);
            if (c >= i) ++c;
            t.push_back({i, c, 0.25 * rng.complex_unit_box()});
        }
    }
    const SparseMatrix b = SparseMatrix::from_entries(n, t);
    SparseMatrix h = sparse_product(b.conj_transpose(), b);
    if (dominance > 0.0) h = add(h, SparseMatrix::identity(n), dominance);
    // Average with the conjugate transpose so the result is exactly Hermitian.
    return add(h, h.conj_transpose()).scaled(0.5);
}

SparseMatrix diag_dominant_random(Index n, std::uint64_t seed, double margin) {
    require(n >= 1, "diag_dominant_random needs n >= 1");
    require(margin > 0.0, "margin must be positive");
    SplitMix64 rng(seed);
    std::vector<Triplet> t;
    std::vector<Index> cols;
    for (Index i = 0; i < n; ++i) {
        cols.clear();
        const Index want = std::min<Index>(3, n - 1);
        while (cols.size() < want) {
            Index c = rng.below(n - 1);
            if (c >= i) ++c;
            if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
        }
        double sum = 0.0;
        for (Index c : cols) {
            const Complex v = rng.complex_unit_box();
            sum += std::abs(v);
            t.push_back({i, c, v});
        }
        t.push_back({i, i, std::polar(sum + margin, rng.uniform(0.0, 2.0 * std::numbers::pi))});
    }
    return SparseMatrix::from_entries(n, t);
}

SparseMatrix example_2x2(Complex alpha) {
    const Triplet t[] = {{0, 0, 1.0}, {0, 1, alpha}, {1, 0, alpha}, {1, 1, 1.0}};
    return SparseMatrix::from_entries(2, t);
}

Kind parse_kind(const std::string& name) {
    if (name == "laplacian2d" || name == "laplacian") return Kind::laplacian2d;
    if (name == "toeplitz" || name == "toeplitz_tridiag") return Kind::toeplitz;
    if (name == "block_t3" || name == "blockt3" || name == "t3") return Kind::block_t3;
    if (name == "checkerboard") return Kind::checkerboard;
    if (name == "hpd_random" || name == "hpd") return Kind::hpd_random;
    if (name == "diag_dominant_random" || name == "diagdom") return Kind::diag_dominant_random;
    if (name == "example2x2" || name == "example_2x2") return Kind::example_2x2;
    throw Error(ErrorCode::InvalidArgument, "unknown generator kind '" + name + "'");
}

std::string to_string(Kind kind) {
    switch (kind) {
        case Kind::laplacian2d: return "laplacian2d";
        case Kind::toeplitz: return "toeplitz";
        case Kind::block_t3: return "block_t3";
        case Kind::checkerboard: return "checkerboard";
        case Kind::hpd_random: return "hpd_random";
        case Kind::diag_dominant_random: return "diag_dominant_random";
        case Kind::example_2x2: return "example2x2";
    }
    return "unknown";
}

std::string GeneratorSpec::describe() const {
    std::string s = to_string(kind);
    switch (kind) {
        case Kind::laplacian2d: return s + " m=" + std::to_string(m);
        case Kind::toeplitz: return s + " n=" + std::to_string(n) + " a=" + fmt(a) + " b=" + fmt(b);
        case Kind::block_t3: return s + " n=" + std::to_string(n);
        case Kind::checkerboard:
            return s + " k=" + std::to_string(k) + " block_size=" + std::to_string(block_size) +
                   " coupling=" + fmt(coupling_scale) + " seed=" + std::to_string(seed);
        case Kind::hpd_random:
            return s + " n=" + std::to_string(n) + " dominance=" + fmt(dominance) + " seed=" + std::to_string(seed);
        case Kind::diag_dominant_random:
            return s + " n=" + std::to_string(n) + " margin=" + fmt(margin) + " seed=" + std::to_string(seed);
        case Kind::example_2x2: return s + " alpha=" + fmt(alpha);
    }
    return s;
}

SparseMatrix generate(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case Kind::laplacian2d: return laplacian_2d(spec.m);
        case Kind::toeplitz: return toeplitz_tridiag(spec.n, spec.a, spec.b);
        case Kind::block_t3: return block_t3(spec.n);
        case Kind::checkerboard: return random_checkerboard(spec.k, spec.block_size, spec.coupling_scale, spec.seed);
        case Kind::hpd_random: return hpd_random(spec.n, spec.seed, spec.dominance);
        case Kind::diag_dominant_random: return diag_dominant_random(spec.n, spec.seed, spec.margin);
        case Kind::example_2x2: return example_2x2(spec.alpha);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown generator kind");
}

namespace {

double parse_real_part(std::string_view s, const std::string& whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw Error(ErrorCode::InvalidArgument, "cannot parse complex literal '" + whole + "'");
    }
    return v;
}

}  // namespace

Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error(ErrorCode::InvalidArgument, "empty complex literal");

    if (s.back() != 'i' && s.back() != 'j') return {parse_real_part(s, text), 0.0};

    const std::string_view body(s.data(), s.size() - 1);
    // The split is the last sign that is neither leading nor part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t p = body.size(); p-- > 1;) {
        if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
            split = p;
            break;
        }
    }
    auto imag_of = [&](std::string_view part) {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        return parse_real_part(part, text);
    };
    if (split == std::string_view::npos) return {0.0, imag_of(body)};
    return {parse_real_part(body.substr(0, split), text), imag_of(body.substr(split))};
}

}  // namespace zonedet::generators
