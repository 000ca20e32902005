#pragma once

#include "decoshell/params.hpp"

namespace decoshell {

struct MomentumPoint {
    double kx = 0.0;  // along the motion
    double ky = 0.0;  // transverse

    double norm2() const { return kx * kx + ky * ky; }
};

enum class FrequencySign { positive, negative };

/// Boundary-mode dispersion u_phi sqrt(k^2 + m_phi^2 u_phi^2).
double omega_k(const ModelParams& p, MomentumPoint k);

/// Ideal spectral density: a delta of weight `coefficient` at `location`.
/// Deltas are never sampled pointwise; the shell reduction consumes them.
struct DeltaShell {
    double coefficient;  // pi u_phi^2 / Omega_k
    double location;     // +Omega_k or -Omega_k
};

DeltaShell spectral_pm(const ModelParams& p, FrequencySign sign, MomentumPoint k);

/// Lorentzian-broadened density: the delta weight times a unit-normalized
/// Lorentzian of half-width gamma_phi. Throws WidthError if gamma_phi == 0.
double lorentzian_pm(const ModelParams& p, FrequencySign sign, double omega, MomentumPoint k);

/// Unit-normalized Lorentzian (1/pi) w / (x^2 + w^2).
inline double unit_lorentzian(double x, double width) {
    return width / (3.14159265358979323846 * (x * x + width * width));
}

}  // namespace decoshell
