#include "decoshell/dispersion.hpp"

#include <cmath>
#include <numbers>

#include "decoshell/errors.hpp"

namespace decoshell {

double omega_k(const ModelParams& p, MomentumPoint k) {
    const double gap = p.m_phi * p.u_phi;
    return p.u_phi * std::sqrt(k.norm2() + gap * gap);
}

DeltaShell spectral_pm(const ModelParams& p, FrequencySign sign, MomentumPoint k) {
    const double w = omega_k(p, k);
    return {std::numbers::pi * p.u_phi * p.u_phi / w, sign == FrequencySign::positive ? w : -w};
}

double lorentzian_pm(const ModelParams& p, FrequencySign sign, double omega, MomentumPoint k) {
    if (!(p.gamma_phi > 0.0))
        throw WidthError("lorentzian_pm needs gamma_phi > 0; use the ideal delta shell instead");
    const DeltaShell s = spectral_pm(p, sign, k);
    return s.coefficient * unit_lorentzian(omega - s.location, p.gamma_phi);
}

}  // namespace decoshell
