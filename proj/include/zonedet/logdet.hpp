#pragma once

#include <cmath>
#include <numbers>

#include "zonedet/types.hpp"

namespace zonedet {

/// Maps an angle into (-pi, pi].
inline double wrap_phase(double phase) noexcept {
    double r = std::remainder(phase, 2.0 * std::numbers::pi);
    if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
    return r;
}

/// Log-determinant held as ln|det| plus an unwrapped, accumulated phase.
struct LogDet {
    double ln_abs = 0.0;
    double phase = 0.0;

    [[nodiscard]] double principal_phase() const noexcept { return wrap_phase(phase); }
    [[nodiscard]] Complex as_complex() const noexcept { return {ln_abs, phase}; }
    /// exp(LogDet); overflows for |ln_abs| beyond ~709.
    [[nodiscard]] Complex value() const noexcept { return std::polar(std::exp(ln_abs), principal_phase()); }

    static LogDet from_complex(Complex z) noexcept { return {z.real(), z.imag()}; }

    LogDet& operator+=(const LogDet& other) noexcept {
        ln_abs += other.ln_abs;
        phase += other.phase;
        return *this;
    }
    friend LogDet operator+(LogDet a, const LogDet& b) noexcept { return a += b; }
};

/// Branch-safe distance between two complex logarithms:
/// |d re| + |d im mod 2 pi|.
inline double log_distance(Complex a, Complex b) noexcept {
    return std::abs(a.real() - b.real()) + std::abs(wrap_phase(a.imag() - b.imag()));
}

inline double log_distance(const LogDet& a, const LogDet& b) noexcept {
    return log_distance(a.as_complex(), b.as_complex());
}

}  // namespace zonedet
