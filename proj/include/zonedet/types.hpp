#pragma once

#include <complex>
#include <cstddef>

namespace zonedet {

using Complex = std::complex<double>;
using Index = std::size_t;

/// One (row, col, value) entry. Indices are 0-based.
struct Triplet {
    Index row = 0;
    Index col = 0;
    Complex value{};

    friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// Magnitude below which computed entries are treated as structural zeros.
inline constexpr double kDropTolerance = 1e-300;

}  // namespace zonedet
