#pragma once

#include "decoshell/params.hpp"

namespace decoshell {

/// On-shell point of v kx = 2 Omega(kx, ky) at fixed ky.
struct ShellPoint {
    double kx_star = 0.0;
    double omega_star = 0.0;
    double jacobian_w = 0.0;  // v / (v^2 - 4 u_phi^2)
    double ky = 0.0;
    double beta2 = 0.0;       // ky^2 + m_phi^2 u_phi^2
    bool near_threshold = false;
};

inline constexpr double kNearThresholdRatio = 1e5;

/// True iff v_rel > 2 u_phi strictly.
bool above_threshold(const ModelParams& p);

/// Throws ThresholdError at or below threshold. No clamping near threshold;
/// kx_star > 1e5 sqrt(beta2) is reported through near_threshold.
ShellPoint shell_point(const ModelParams& p, double ky);

/// |d/dkx (v kx - 2 Omega)| at kx_star by central differences minus the
/// analytic slope 1/jacobian_w = (v^2 - 4 u_phi^2)/v. Test helper.
double jacobian_check(const ModelParams& p, double ky, double step = 1e-5);

}  // namespace decoshell
