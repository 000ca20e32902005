#include "decoshell/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "decoshell/errors.hpp"

namespace decoshell {

namespace {

BranchKind classify(cplx gamma) {
    return gamma.real() > std::abs(gamma.imag()) * 1e-8 ? BranchKind::evanescent
                                                         : BranchKind::propagating;
}

}  // namespace

double Branches::min_decay_rate() const { return std::min(gamma1.real(), gamma2.real()); }

cplx KernelPoint::shifted_delta_h() const {
    // k^2 + m_H^2 - (omega + i eps)^2 / u^2 = delta_h + (eps^2 - 2 i omega eps) / u^2
    const double u2 = u_psi * u_psi;
    return {delta_h + eps_ret * eps_ret / u2, -2.0 * omega * eps_ret / u2};
}

KernelPoint kernel_point(const DerivedParams& d, const ModelParams& p, double omega, MomentumPoint k,
                         const Numerics& num) {
    KernelPoint kp;
    kp.omega = omega;
    kp.k = k;
    const double k2 = k.norm2();
    kp.kappa = std::sqrt(k2 + d.m_A * d.m_A);
    kp.delta_h = k2 + d.m_H * d.m_H - omega * omega / (p.u_psi * p.u_psi);
    kp.u_psi = p.u_psi;
    kp.eps_ret = num.eps_ret;
    return kp;
}

Branches solve_branches(cplx delta_h, double kappa2, double c_mix, double tol_deg) {
    const cplx b = delta_h + kappa2;
    const cplx c = delta_h * kappa2 - c_mix * c_mix;
    // b^2 - 4c rewritten without cancellation
    const cplx diff = delta_h - kappa2;
    const cplx s = std::sqrt(diff * diff + 4.0 * c_mix * c_mix);

    // larger-magnitude root first, the other from Vieta
    const cplx big = std::abs(b + s) >= std::abs(b - s) ? 0.5 * (b + s) : 0.5 * (b - s);
    const cplx small = big != cplx{0.0, 0.0} ? c / big : 0.5 * (b - s);

    // gamma_1 continues the bare amplitude branch (delta_h at C = 0)
    cplx x1 = big, x2 = small;
    if (std::abs(small - delta_h) < std::abs(big - delta_h)) std::swap(x1, x2);

    Branches br;
    br.delta_h = delta_h;
    br.c_mix = c_mix;
    br.gamma1 = std::sqrt(x1);
    br.gamma2 = std::sqrt(x2);
    br.kind1 = classify(br.gamma1);
    br.kind2 = classify(br.gamma2);
    const double scale = std::max(std::abs(x1), std::abs(x2));
    br.degenerate = std::abs(x1 - x2) <= tol_deg * scale;
    return br;
}

Branches solve_branches(const KernelPoint& kp, double c_mix, double tol_deg) {
    return solve_branches(kp.shifted_delta_h(), kp.kappa * kp.kappa, c_mix, tol_deg);
}

double pole_residual(cplx gamma_sq, cplx delta_h, double kappa2, double c_mix) {
    const cplx b = delta_h + kappa2;
    const cplx c = delta_h * kappa2 - c_mix * c_mix;
    return std::abs(gamma_sq * gamma_sq - b * gamma_sq + c);
}

double pole_residual_scaled(cplx gamma_sq, cplx delta_h, double kappa2, double c_mix) {
    const cplx b = delta_h + kappa2;
    const cplx c = delta_h * kappa2 - c_mix * c_mix;
    const double scale = std::norm(gamma_sq) + std::abs(b * gamma_sq) + std::abs(c);
    const double r = pole_residual(gamma_sq, delta_h, kappa2, c_mix);
    return scale > 0.0 ? r / scale : r;
}

cplx g_inter_confluent(cplx gamma_sq, double kappa2, double a_sep) {
    // -(1/2) d/dx [(kappa^2 - x) x^{-1/2} exp(-a sqrt(x))]
    const cplx g = std::sqrt(gamma_sq);
    const cplx r = kappa2 - gamma_sq;
    return 0.5 * std::exp(-g * a_sep) * (1.0 / g + r / (2.0 * g * gamma_sq) + a_sep * r / (2.0 * gamma_sq));
}

cplx g_inter(const Branches& b, const KernelPoint& kp, double a_sep) {
    const double kappa2 = kp.kappa * kp.kappa;
    const cplx x1 = b.gamma1 * b.gamma1;
    const cplx x2 = b.gamma2 * b.gamma2;
    if (b.degenerate) return g_inter_confluent(0.5 * (x1 + x2), kappa2, a_sep);
    const cplx dh = b.delta_h;
    const double c2 = b.c_mix * b.c_mix;
    // (x - delta_h)(x - kappa^2) = C^2: take kappa^2 - x from whichever factor is not small
    auto residue = [&](cplx x) {
        return std::abs(x - kappa2) < std::abs(x - dh) ? c2 / (dh - x) : cplx(kappa2) - x;
    };
    const cplx t1 = residue(x1) / b.gamma1 * std::exp(-b.gamma1 * a_sep);
    const cplx t2 = residue(x2) / b.gamma2 * std::exp(-b.gamma2 * a_sep);
    return (t2 - t1) / (2.0 * (x1 - x2));
}

cplx g_same(const Branches& b, const KernelPoint& kp) { return g_inter(b, kp, 0.0); }

double g_bulk_symmetric(const ModelParams& p, double omega, MomentumPoint k, double m_gap) {
    const double detune = omega - p.mu;
    const double kt2 = k.norm2() + m_gap * m_gap - detune * detune / (p.u_psi * p.u_psi);
    if (!(kt2 > 0.0)) {
        std::ostringstream os;
        os << "symmetric-phase kernel is not evanescent (kappa_tilde^2 = " << kt2 << ")";
        throw EvanescenceError(os.str());
    }
    const double kt = std::sqrt(kt2);
    return std::exp(-kt * p.a_sep) / (2.0 * kt);
}

cplx g_inter_at(const DerivedParams& d, const ModelParams& p, double omega, MomentumPoint k,
                const Numerics& num) {
    const KernelPoint kp = kernel_point(d, p, omega, k, num);
    return g_inter(solve_branches(kp, d.c_mix, num.tol_deg), kp, p.a_sep);
}

}  // namespace decoshell
