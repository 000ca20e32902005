#include "decoshell/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "decoshell/errors.hpp"

namespace decoshell {

namespace {

cplx amplitude_at(const DerivedParams& d, const ModelParams& p, const KernelPoint& kp, BoundaryPair at,
                  double tol_deg) {
    const Branches br = solve_branches(kp, d.c_mix, tol_deg);
    if (at == BoundaryPair::aa || at == BoundaryPair::bb) return g_same(br, kp);
    return g_inter(br, kp, p.a_sep);
}

}  // namespace

double KernelMatrix2::min_eigenvalue_hermitian() const {
    const double half_tr = 0.5 * (aa.real() + bb.real());
    const double half_diff = 0.5 * (aa.real() - bb.real());
    return half_tr - std::hypot(half_diff, std::abs(ab));
}

KernelMatrix2 retarded_matrix(const DerivedParams& d, const ModelParams& p, double omega, MomentumPoint k,
                              const Numerics& num) {
    const KernelPoint kp = kernel_point(d, p, omega, k, num);
    const Branches br = solve_branches(kp, d.c_mix, num.tol_deg);
    const cplx same = g_same(br, kp);
    const cplx inter = g_inter(br, kp, p.a_sep);
    KernelMatrix2 m;
    m.aa = d.lambda_A * d.lambda_A * same;
    m.bb = d.lambda_B * d.lambda_B * same;
    m.ab = d.lambda_A * d.lambda_B * inter;
    m.ba = m.ab;
    return m;
}

double spectral_rho_h(const DerivedParams& d, const ModelParams& p, double omega, MomentumPoint k,
                      BoundaryPair at, const Numerics& num) {
    KernelPoint upper = kernel_point(d, p, omega, k, num);
    KernelPoint lower = upper;
    lower.eps_ret = -upper.eps_ret;
    const cplx g_up = amplitude_at(d, p, upper, at, num.tol_deg);
    const cplx g_lo = amplitude_at(d, p, lower, at, num.tol_deg);
    // -i (G(omega + i eps) - G(omega - i eps)); the real part is the weight
    return g_up.imag() - g_lo.imag();
}

double hadamard(const DerivedParams& d, const ModelParams& p, double omega, MomentumPoint k, BoundaryPair at,
                const Numerics& num) {
    if (p.beta.is_zero_temperature()) {
        if (omega == 0.0) throw ZeroFrequencyError("sgn(omega) undefined at omega = 0, zero temperature");
        const double rho = spectral_rho_h(d, p, omega, k, at, num);
        return omega > 0.0 ? 0.5 * rho : -0.5 * rho;
    }
    const double beta = p.beta.beta();
    if (omega == 0.0) {
        // coth(beta w/2) rho(w)/2 -> rho'(0)/beta
        const double h = 1e-6 * p.u_psi * std::max({d.m_H, d.m_A, 1e-12});
        return spectral_rho_h(d, p, h, k, at, num) / (h * beta);
    }
    const double rho = spectral_rho_h(d, p, omega, k, at, num);
    return 0.5 * rho / std::tanh(0.5 * beta * omega);
}

KernelMatrix2 noise_matrix(const DerivedParams& d, const ModelParams& p, double omega, MomentumPoint k,
                           const Numerics& num) {
    const double h_same = hadamard(d, p, omega, k, BoundaryPair::aa, num);
    const double h_inter = hadamard(d, p, omega, k, BoundaryPair::ab, num);
    KernelMatrix2 m;
    m.aa = d.lambda_A * d.lambda_A * h_same;
    m.bb = d.lambda_B * d.lambda_B * h_same;
    m.ab = d.lambda_A * d.lambda_B * h_inter;
    m.ba = std::conj(m.ab);
    return m;
}

}  // namespace decoshell
