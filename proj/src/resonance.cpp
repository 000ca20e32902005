#include "decoshell/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "decoshell/dispersion.hpp"
#include "decoshell/errors.hpp"

namespace decoshell {

bool above_threshold(const ModelParams& p) { return p.v_rel > 2.0 * p.u_phi; }

ShellPoint shell_point(const ModelParams& p, double ky) {
    if (!above_threshold(p)) {
        std::ostringstream os;
        os << "no resonant shell: v_rel = " << p.v_rel << " <= 2 u_phi = " << 2.0 * p.u_phi;
        throw ThresholdError(os.str());
    }
    const double v = p.v_rel;
    const double u = p.u_phi;
    const double gap = p.m_phi * u;
    const double excess = v * v - 4.0 * u * u;
    const double root = std::sqrt(excess);

    ShellPoint s;
    s.ky = ky;
    s.beta2 = ky * ky + gap * gap;
    const double beta = std::sqrt(s.beta2);
    s.kx_star = 2.0 * u * beta / root;
    s.omega_star = u * v * beta / root;
    s.jacobian_w = v / excess;
    s.near_threshold = s.kx_star > kNearThresholdRatio * beta;
    return s;
}

double jacobian_check(const ModelParams& p, double ky, double step) {
    const ShellPoint s = shell_point(p, ky);
    const double v = p.v_rel;
    auto f = [&](double kx) { return v * kx - 2.0 * omega_k(p, {kx, ky}); };
    const double h = step * std::max(std::sqrt(s.beta2), s.kx_star);
    const double slope = (f(s.kx_star + h) - f(s.kx_star - h)) / (2.0 * h);
    return std::abs(slope) - 1.0 / s.jacobian_w;
}

}  // namespace decoshell
