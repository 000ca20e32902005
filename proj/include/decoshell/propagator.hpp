#pragma once

#include <complex>

#include "decoshell/dispersion.hpp"
#include "decoshell/params.hpp"

namespace decoshell {

using cplx = std::complex<double>;

enum class BranchKind { evanescent, propagating };

/// The two decay rates gamma_{1,2} of the dressed amplitude mode along z,
/// i.e. the poles q = i gamma of the hybridized propagator.
struct Branches {
    cplx gamma1;
    cplx gamma2;
    BranchKind kind1 = BranchKind::evanescent;
    BranchKind kind2 = BranchKind::evanescent;
    bool degenerate = false;
    cplx delta_h;        // shifted value the roots were solved for
    double c_mix = 0.0;

    double min_decay_rate() const;
};

/// Kernel evaluation point. delta_h is the real, unshifted value
/// k^2 + m_H^2 - omega^2/u_psi^2; the retarded shift is applied by the solver.
struct KernelPoint {
    double omega = 0.0;
    MomentumPoint k;
    double kappa = 0.0;    // sqrt(k^2 + m_A^2)
    double delta_h = 0.0;
    double u_psi = 1.0;
    double eps_ret = 1e-9;

    /// Delta_h at omega + i eps_ret.
    cplx shifted_delta_h() const;
};

KernelPoint kernel_point(const DerivedParams& d, const ModelParams& p, double omega, MomentumPoint k,
                         const Numerics& num = {});

/// Roots x = gamma^2 of x^2 - (delta_h + kappa^2) x + (delta_h kappa^2 - C^2) = 0,
/// principal square roots taken so that Re gamma >= 0.
Branches solve_branches(cplx delta_h, double kappa2, double c_mix, double tol_deg = 1e-8);
Branches solve_branches(const KernelPoint& kp, double c_mix, double tol_deg = 1e-8);

/// |x^2 - b x + c| for one branch, used by residual checks.
double pole_residual(cplx gamma_sq, cplx delta_h, double kappa2, double c_mix);

/// pole_residual divided by |x|^2 + |b x| + |c|, the size of the largest term.
double pole_residual_scaled(cplx gamma_sq, cplx delta_h, double kappa2, double c_mix);

/// Inter-plate amplitude G_h^R(omega, k; a, 0). Sign fixed so that the
/// decoupled limit is +exp(-gamma a)/(2 gamma). Degenerate branches use the
/// confluent limit.
cplx g_inter(const Branches& b, const KernelPoint& kp, double a_sep);

/// Same-plate amplitude, the a = 0 value of g_inter.
cplx g_same(const Branches& b, const KernelPoint& kp);

/// Confluent (gamma_1^2 == gamma_2^2 == x) limit of g_inter.
cplx g_inter_confluent(cplx gamma_sq, double kappa2, double a_sep);

/// Symmetric-phase bulk propagator exp(-kt a)/(2 kt) with
/// kt^2 = k^2 + M^2 - (omega - mu)^2/u_psi^2. Throws EvanescenceError if kt^2 <= 0.
double g_bulk_symmetric(const ModelParams& p, double omega, MomentumPoint k, double m_gap);

/// Convenience: retarded inter-plate amplitude at (omega, k) with the model's separation.
cplx g_inter_at(const DerivedParams& d, const ModelParams& p, double omega, MomentumPoint k,
                const Numerics& num = {});

}  // namespace decoshell
