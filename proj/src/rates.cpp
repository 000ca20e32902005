#include "decoshell/rates.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "decoshell/dispersion.hpp"
#include "decoshell/errors.hpp"

namespace decoshell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

double transverse_gap(const ModelParams& p) {
    const double b0 = p.m_phi * p.u_phi;
    if (!(b0 > 0.0)) throw ParamError("shell integral needs m_phi * u_phi > 0");
    return b0;
}

quad::Options options_from(const Numerics& num, ExecPolicy exec) {
    return {num.rel_tol, num.abs_tol, num.max_evals, exec};
}

void require_converged(const quad::Result& r, const char* what) {
    if (r.status == quad::Status::max_evals) {
        std::ostringstream os;
        os << what << ": tolerance not met within " << r.n_evals << " evaluations (estimate " << r.value
           << " +- " << r.abs_err << ")";
        throw QuadratureError(os.str());
    }
}

// 2 * int_0^inf dky F(ky) / (ky^2 + b0^2) with ky = b0 tan(theta).
template <class KernelSq>
quad::Result shell_ky_integral(const ModelParams& p, const Numerics& num, KernelSq&& kernel_sq) {
    const double b0 = transverse_gap(p);
    auto f = [&](double theta) {
        const double ky = b0 * std::tan(theta);
        const ShellPoint s = shell_point(p, ky);
        return kernel_sq(s) / b0;
    };
    std::vector<double> pts{0.0};
    if (p.a_sep > 0.0) {
        const double t = std::atan(1.0 / (p.a_sep * b0));
        if (t > 0.0 && t < kHalfPi) pts.push_back(t);
    }
    pts.push_back(kHalfPi);
    quad::Result r = quad::gauss_kronrod(f, pts, options_from(num, num.exec));
    r.value *= 2.0;
    r.abs_err *= 2.0;
    return r;
}

RateResult finish(const quad::Result& r, double prefactor, RateMode mode, const ModelParams& p) {
    RateResult out;
    out.value = prefactor * r.value;
    out.abs_err = prefactor * r.abs_err;
    out.n_evals = r.n_evals;
    out.mode = mode;
    out.status = r.status;
    out.shell = shell_point(p, 0.0);
    return out;
}

// (1/2 pi) int dw L(w - c1) L(w - c2) K(w), each half of the line mapped by the
// tangent of the Lorentzian centered there.
template <class Kernel>
double lorentz_pair_integral(double c1, double c2, double width, const Numerics& num, Kernel&& kernel) {
    const double lo = std::min(c1, c2);
    const double hi = std::max(c1, c2);
    const double mid = 0.5 * (lo + hi);
    quad::Options opt = options_from(num, ExecPolicy::serial);
    opt.rel_tol = std::min(opt.rel_tol, 1e-9);

    auto left = [&](double th) {
        const double w = lo + width * std::tan(th);
        return unit_lorentzian(w - hi, width) * kernel(w) / kPi;
    };
    auto right = [&](double th) {
        const double w = hi + width * std::tan(th);
        return unit_lorentzian(w - lo, width) * kernel(w) / kPi;
    };
    const std::array<double, 2> pl{-kHalfPi, std::atan((mid - lo) / width)};
    const std::array<double, 2> pr{std::atan((mid - hi) / width), kHalfPi};
    const quad::Result rl = quad::gauss_kronrod(left, pl, opt);
    require_converged(rl, "overlap weight");
    const quad::Result rr = quad::gauss_kronrod(right, pr, opt);
    require_converged(rr, "overlap weight");
    return (rl.value + rr.value) / (2.0 * kPi);
}

void require_width(const ModelParams& p) {
    if (!(p.gamma_phi > 0.0)) throw WidthError("broadened rate needs gamma_phi > 0");
}

}  // namespace

std::string to_string(RateMode m) {
    switch (m) {
        case RateMode::resonant: return "resonant";
        case RateMode::regularized: return "regularized";
        case RateMode::symmetric: return "symmetric";
        case RateMode::im_gamma: return "im_gamma";
        case RateMode::local: return "local";
    }
    return "unknown";
}

RateResult im_gamma_cross(const ModelParams& p, const DerivedParams& d, const Numerics& num) {
    transverse_gap(p);
    RateResult out;
    out.mode = RateMode::im_gamma;
    if (!above_threshold(p)) return out;

    const quad::Result r = shell_ky_integral(p, num, [&](const ShellPoint& s) {
        return std::norm(g_inter_at(d, p, s.omega_star, {s.kx_star, s.ky}, num));
    });
    require_converged(r, "im_gamma_cross");
    const double lam = d.lambda_A * d.lambda_B;
    const double pref = lam * lam * p.u_phi * p.u_phi / (8.0 * kPi * p.v_rel);
    return finish(r, pref, RateMode::im_gamma, p);
}

RateResult rate_resonant(const ModelParams& p, const DerivedParams& d, const Numerics& num) {
    RateResult out = im_gamma_cross(p, d, num);
    out.mode = RateMode::resonant;
    return out;
}

RateResult rate_local(const ModelParams& p, const DerivedParams& d, Boundary which, const Numerics& num) {
    transverse_gap(p);
    RateResult out;
    out.mode = RateMode::local;
    if (!above_threshold(p)) return out;

    const quad::Result r = shell_ky_integral(p, num, [&](const ShellPoint& s) {
        const KernelPoint kp = kernel_point(d, p, s.omega_star, {s.kx_star, s.ky}, num);
        return std::norm(g_same(solve_branches(kp, d.c_mix, num.tol_deg), kp));
    });
    require_converged(r, "rate_local");
    const double lam = which == Boundary::A ? d.lambda_A : d.lambda_B;
    const double lam2 = lam * lam;
    const double pref = lam2 * lam2 * p.u_phi * p.u_phi / (8.0 * kPi * p.v_rel);
    return finish(r, pref, RateMode::local, p);
}

RateResult im_gamma_symmetric(const ModelParams& p, double m_gap, const Numerics& num,
                              const SymmetricKernel& kernel) {
    transverse_gap(p);
    RateResult out;
    out.mode = RateMode::symmetric;
    out.stand_in_kernel = !kernel;
    if (!above_threshold(p)) return out;

    const quad::Result r = shell_ky_integral(p, num, [&](const ShellPoint& s) {
        const MomentumPoint k{s.kx_star, s.ky};
        const double g = kernel ? kernel(s.omega_star, k) : g_bulk_symmetric(p, s.omega_star, k, m_gap);
        return g * g;
    });
    require_converged(r, "im_gamma_symmetric");
    const double g2 = p.g_A * p.g_A * p.g_B * p.g_B;
    const double pref = g2 * p.u_phi * p.u_phi / (8.0 * kPi * p.v_rel);
    RateResult res = finish(r, pref, RateMode::symmetric, p);
    res.stand_in_kernel = !kernel;
    return res;
}

double overlap_peak_frequency(double v, MomentumPoint k) { return 0.5 * v * k.kx; }

double overlap_weight(const ModelParams& p, double v, MomentumPoint k, const Numerics& num) {
    require_width(p);
    const double w = omega_k(p, k);
    const double coeff = kPi * p.u_phi * p.u_phi / w;
    return coeff * coeff * lorentz_pair_integral(v * k.kx - w, w, p.gamma_phi, num, [](double) { return 1.0; });
}

double overlap_weight_exact_kernel(const ModelParams& p, const DerivedParams& d, double v, MomentumPoint k,
                                   const Numerics& num) {
    require_width(p);
    const double w = omega_k(p, k);
    const double coeff = kPi * p.u_phi * p.u_phi / w;
    ModelParams pv = p;
    pv.v_rel = v;
    return coeff * coeff * lorentz_pair_integral(v * k.kx - w, w, p.gamma_phi, num, [&](double om) {
               return std::norm(g_inter_at(d, pv, om, k, num));
           });
}

RateResult rate_regularized(const ModelParams& p, const DerivedParams& d, const Numerics& num,
                            KernelTreatment treatment) {
    require_width(p);
    const double b0 = transverse_gap(p);
    const double v = p.v_rel;
    const double u = p.u_phi;
    const double excess = v * v - 4.0 * u * u;
    std::atomic<std::size_t> inner_evals{0};

    Numerics inner = num;
    inner.exec = ExecPolicy::serial;
    inner.rel_tol = std::min(num.rel_tol * 1e-2, 1e-8);

    auto kx_integral = [&](double ky) {
        const double beta = std::hypot(ky, b0);
        auto f = [&](double phi) {
            const double c = std::cos(phi);
            const double kx = beta * std::tan(phi);
            const MomentumPoint k{kx, ky};
            double wk;
            if (treatment == KernelTreatment::exact) {
                wk = overlap_weight_exact_kernel(p, d, v, k, inner);
            } else {
                wk = overlap_weight(p, v, k, inner) *
                     std::norm(g_inter_at(d, p, overlap_peak_frequency(v, k), k, num));
            }
            return wk * beta / (c * c);
        };
        std::vector<double> pts{-kHalfPi};
        if (excess > 0.0) {
            const double kx_star = 2.0 * u * beta / std::sqrt(excess);
            const double width = 2.0 * p.gamma_phi * v / excess;
            for (double j : {-1000.0, -100.0, -10.0, -1.0, 0.0, 1.0, 10.0, 100.0, 1000.0})
                pts.push_back(std::atan((kx_star + j * width) / beta));
        } else if (excess < 0.0) {
            pts.push_back(std::atan(v / std::sqrt(-excess)));
        }
        pts.push_back(kHalfPi);
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        const quad::Result r = quad::gauss_kronrod(f, pts, options_from(inner, ExecPolicy::serial));
        require_converged(r, "rate_regularized (kx)");
        inner_evals += r.n_evals;
        return r.value;
    };

    auto outer = [&](double theta) {
        const double c = std::cos(theta);
        return kx_integral(b0 * std::tan(theta)) * b0 / (c * c);
    };
    const std::array<double, 2> pts{0.0, kHalfPi};
    quad::Result r = quad::gauss_kronrod(outer, pts, options_from(num, num.exec));
    require_converged(r, "rate_regularized (ky)");

    const double lam = d.lambda_A * d.lambda_B;
    const double pref = 2.0 * lam * lam / (4.0 * kPi * kPi);
    RateResult out;
    out.value = pref * r.value;
    out.abs_err = pref * r.abs_err;
    out.n_evals = inner_evals.load();
    out.mode = RateMode::regularized;
    out.status = r.status;
    if (above_threshold(p)) out.shell = shell_point(p, 0.0);
    return out;
}

double shell_noise_density(const ModelParams& p, const DerivedParams& d, double omega, MomentumPoint k,
                           const Numerics& num) {
    const double lam = d.lambda_A * d.lambda_B;
    const double ra = lorentzian_pm(p, FrequencySign::negative, omega - p.v_rel * k.kx, k);
    const double rb = lorentzian_pm(p, FrequencySign::positive, omega, k);
    return lam * lam * ra * rb * std::norm(g_inter_at(d, p, omega, k, num)) / (8.0 * kPi * kPi * kPi);
}

double min_decay_rate(const ModelParams& p, const DerivedParams& d, const Numerics& num) {
    const ShellPoint s = shell_point(p, 0.0);
    const KernelPoint kp = kernel_point(d, p, s.omega_star, {s.kx_star, 0.0}, num);
    return solve_branches(kp, d.c_mix, num.tol_deg).min_decay_rate();
}

}  // namespace decoshell
