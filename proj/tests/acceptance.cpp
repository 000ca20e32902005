// Acceptance criteria 1-10: one PASS/FAIL line each, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "decoshell/kernels.hpp"
#include "decoshell/platforms.hpp"
#include "decoshell/rates.hpp"
#include "decoshell/sweep.hpp"
#include "generators.hpp"

using namespace decoshell;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

char buf[512];

template <class... A>
std::string fmt(const char* f, A... a) {
    std::snprintf(buf, sizeof buf, f, a...);
    return buf;
}

ModelParams at_ratio(ModelParams p, double ratio) {
    p.v_rel = ratio * 2.0 * p.u_phi;
    return p;
}

// 1. threshold exactness over 200 random condensed draws
Outcome threshold_exactness() {
    gen::Gen g(1001);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
        ModelParams p = g.condensed();
        const DerivedParams d = derive_condensate(p);
        const double below = i % 10 == 0 ? 1.0 : g.ratio_below();
        const RateResult rb = rate_resonant(at_ratio(p, below), d);
        if (!(rb.value == 0.0)) ++bad;
        const RateResult ra = rate_resonant(at_ratio(p, g.ratio_above()), d);
        if (!(ra.value > 0.0)) ++bad;
    }
    return {bad == 0, fmt("%d sign violations in 400 evaluations", bad)};
}

// 2. finite-difference Jacobian at 100 random shell points
Outcome jacobian_oracle() {
    gen::Gen g(1002);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const ModelParams p = at_ratio(g.condensed(), g.uniform(1.01, 6.0));
        const double ky = g.uniform(-5.0, 5.0);
        const ShellPoint s = shell_point(p, ky);
        auto f = [&](double kx) { return p.v_rel * kx - 2.0 * omega_k(p, {kx, ky}); };
        const double h = 1e-5 * std::max(std::sqrt(s.beta2), s.kx_star);
        const double fd = std::abs((f(s.kx_star + h) - f(s.kx_star - h)) / (2.0 * h));
        const double analytic = (p.v_rel * p.v_rel - 4.0 * p.u_phi * p.u_phi) / p.v_rel;
        worst = std::max(worst, std::abs(fd - analytic) / analytic);
    }
    return {worst < 1e-6, fmt("max relative deviation %.3e (tol 1e-6)", worst)};
}

// 3. pole residuals on 1e4 draws including near-degenerate and propagating cases
Outcome pole_residuals() {
    gen::Gen g(1003);
    double worst = 0.0;
    int degenerate = 0, propagating = 0;
    for (int i = 0; i < 10000; ++i) {
        const double kappa2 = g.log_uniform(1e-3, 1e3);
        const double c = g.log_uniform(1e-3, 1e2);
        cplx dh;
        switch (i % 4) {
            case 0:  // near-degenerate: Delta - kappa^2 close to 2 i C
                dh = cplx(kappa2, 2.0 * c * (1.0 + g.uniform(-1e-7, 1e-7)));
                break;
            case 1:  // Delta kappa^2 < C^2 gives a propagating root
                dh = cplx(g.uniform(-1e3, c * c / kappa2), g.uniform(-1e-6, 1e-6));
                break;
            default:
                dh = cplx(g.uniform(-1e3, 1e3), g.uniform(-1e-3, 1e-3));
        }
        const Branches b = solve_branches(dh, kappa2, c);
        degenerate += b.degenerate;
        propagating += b.kind1 == BranchKind::propagating || b.kind2 == BranchKind::propagating;
        for (cplx gm : {b.gamma1, b.gamma2}) worst = std::max(worst, pole_residual_scaled(gm * gm, dh, kappa2, c));
    }
    return {worst < 1e-10 && propagating > 0,
            fmt("max scaled residual %.3e (tol 1e-10); %d degenerate, %d with a propagating branch", worst,
                degenerate, propagating)};
}

// 4. decoupling oracle at C = 0
Outcome decoupling() {
    gen::Gen g(1004);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        KernelPoint kp;
        kp.delta_h = g.log_uniform(1e-3, 1e4);
        kp.kappa = std::sqrt(g.log_uniform(1e-3, 1e4));
        kp.eps_ret = 0.0;
        const double a = g.uniform(0.0, 8.0);
        const double root = std::sqrt(kp.delta_h);
        const double want = std::exp(-root * a) / (2.0 * root);
        const double got = std::abs(g_inter(solve_branches(kp, 0.0), kp, a));
        worst = std::max(worst, std::abs(got - want) / want);
    }
    return {worst < 1e-12, fmt("max relative deviation %.3e (tol 1e-12)", worst)};
}

// 5. narrow-width convergence of the regularized rate
Outcome narrow_width() {
    const ModelParams p0 = at_ratio(gen::reference(), 2.0);
    const DerivedParams d = derive_condensate(p0);
    const double res = rate_resonant(p0, d).value;
    const double w_star = shell_point(p0, 0.0).omega_star;
    Numerics num;
    num.exec = ExecPolicy::parallel;
    std::vector<double> gaps;
    for (double f : {1e-1, 1e-2, 1e-3}) {
        ModelParams p = p0;
        p.gamma_phi = f * w_star;
        gaps.push_back(std::abs(rate_regularized(p, d, num).value - res) / res);
    }
    const bool pass = gaps[2] < 0.05 && gaps[1] < gaps[0] && gaps[2] < gaps[1];
    return {pass, fmt("relative gaps %.3e, %.3e, %.3e at Gamma/omega* = 1e-1, 1e-2, 1e-3", gaps[0], gaps[1], gaps[2])};
}

double fitted_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// 6. separation decay slope -2 Re gamma_min for two m_A values
Outcome separation_decay() {
    std::string detail;
    bool pass = true;
    double prev_slope = 0.0;
    for (double e : {1.0, 2.0}) {
        ModelParams p = gen::reference();
        p.m_phi = 10.0;  // narrow transverse weight, b0 = 0.1
        p.e_charge = e;
        p = at_ratio(p, 2.0);
        const DerivedParams d = derive_condensate(p);
        const double gmin = min_decay_rate(p, d);
        std::vector<double> as, logs;
        for (int i = 0; i <= 10; ++i) {
            p.a_sep = (3.0 + 5.0 * i / 10.0) / gmin;
            as.push_back(p.a_sep);
            logs.push_back(std::log(rate_resonant(p, d).value));
        }
        const double slope = fitted_slope(as, logs);
        const double rel = std::abs(slope / (-2.0 * gmin) - 1.0);
        pass = pass && rel < 0.05;
        if (e > 1.0) pass = pass && slope < prev_slope;
        prev_slope = slope;
        detail += fmt("m_A=%.3f: slope %.4f vs %.4f (rel %.2e); ", d.m_A, slope, -2.0 * gmin, rel);
    }
    return {pass, detail + "larger m_A steeper"};
}

// 7. interior maximum of R_max(mu)
Outcome mu_nonmonotonic() {
    RunConfig cfg;
    cfg.model = gen::reference();
    const std::vector<double> mus = Axis{"mu", 0.6, 8.0, 16}.values();
    std::vector<double> rmax(mus.size());
    std::exception_ptr first;
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < static_cast<long>(mus.size()); ++i) {
        try {
            RunConfig c = cfg;
            c.model.mu = mus[i];
            rmax[i] = peak_over_v(c, 1.05, 6.0).r_max;
        } catch (...) {
#pragma omp critical
            if (!first) first = std::current_exception();
        }
    }
    if (first) std::rethrow_exception(first);
    int changes = 0, last = 0;
    const double noise = 1e-6 * *std::max_element(rmax.begin(), rmax.end());
    for (std::size_t i = 1; i < rmax.size(); ++i) {
        const double diff = rmax[i] - rmax[i - 1];
        if (std::abs(diff) <= noise) continue;
        const int sgn = diff > 0 ? 1 : -1;
        if (last != 0 && sgn != last) ++changes;
        last = sgn;
    }
    const auto im = std::max_element(rmax.begin(), rmax.end()) - rmax.begin();
    const bool interior = im > 0 && im + 1 < static_cast<long>(rmax.size());
    return {changes == 1 && interior,
            fmt("%zu mu points, %d sign change(s) of first differences, maximum at mu=%.3f", mus.size(), changes,
                mus[im])};
}

// 8. onset on a (v, a) grid does not depend on a
Outcome threshold_separation() {
    RunConfig cfg;
    cfg.model = gen::reference();
    Grid g{{{"a_sep", 0.5, 6.0, 12}, {kVRatioAxis, 0.5, 3.0, 26}}, {}};
    const GridTable t = run_grid(g, Quantity::resonant, cfg, ExecPolicy::parallel);
    std::vector<double> onset(12, -1.0);
    int errors = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& r = t.rows[i];
        if (!r.ok()) ++errors;
        const std::size_t row = i / 26;
        if (r.value > 0.0 && onset[row] < 0.0) onset[row] = r.coords[1];
    }
    const bool same = std::all_of(onset.begin(), onset.end(), [&](double x) { return x == onset[0]; });
    return {errors == 0 && same && onset[0] > 1.0,
            fmt("onset v/(2u_phi) = %.3f in all %zu separation rows (%s)", onset[0], onset.size(),
                same ? "identical" : "differs")};
}

// 9. platform onset universality and Table II ratios
Outcome platforms() {
    RunConfig cfg;
    cfg.model = gen::reference();
    const std::vector<double> xs = Axis{kVRatioAxis, 0.5, 3.0, 101}.values();
    const auto curves = platform_curves(platform_registry(), xs, cfg, ExecPolicy::parallel);
    bool pass = curves.size() == 4;
    for (const auto& c : curves) {
        double top = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (xs[i] <= 1.0) pass = pass && c.normalized[i] == 0.0;
            else pass = pass && c.normalized[i] > 0.0, top = std::max(top, c.normalized[i]);
        }
        pass = pass && top == 1.0;
    }
    const double expect[] = {16.0, 6.67, 0.667, 2.0};
    std::string ratios;
    for (std::size_t i = 0; i < 4; ++i) {
        const double r = platform_registry()[i].a_over_xi();
        pass = pass && std::abs(r - expect[i]) <= 0.005 * expect[i];
        ratios += fmt("%.3f ", r);
    }
    return {pass, "a/xi = " + ratios + "; onset at 1.0 and unit maximum for all presets"};
}

// 10. Hadamard / FDT suite
Outcome hadamard_suite() {
    gen::Gen g(1010);
    double worst_conv = 0.0, worst_odd = 0.0, worst_psd = 0.0;
    for (int i = 0; i < 10000; ++i) {
        ModelParams p = g.condensed();
        if (g.coin()) p.m_H.reset();
        const DerivedParams d = derive_condensate(p);
        const double w = (g.coin() ? 1.0 : -1.0) * g.log_uniform(1e-3, 5.0);
        const MomentumPoint k{g.uniform(-3, 3), g.uniform(-3, 3)};

        if (i < 1000) {
            ModelParams cold = p;
            cold.beta = InverseTemperature::finite(1e3 / std::abs(w));
            for (BoundaryPair bp : {BoundaryPair::aa, BoundaryPair::ab}) {
                const double h0 = hadamard(d, p, w, k, bp);
                const double hb = hadamard(d, cold, w, k, bp);
                if (h0 != 0.0) worst_conv = std::max(worst_conv, std::abs(hb - h0) / std::abs(h0));
                const double rp = spectral_rho_h(d, p, w, k, bp), rm = spectral_rho_h(d, p, -w, k, bp);
                const double sc = std::max(std::abs(rp), std::abs(rm));
                if (sc > 0.0) worst_odd = std::max(worst_odd, std::abs(rp + rm) / sc);
            }
        }
        if (g.coin()) p.beta = InverseTemperature::finite(g.log_uniform(0.1, 100.0));
        const KernelMatrix2 n = noise_matrix(d, p, w, k);
        const double scale = std::abs(n.aa) + std::abs(n.bb);
        if (scale > 0.0) worst_psd = std::max(worst_psd, -n.min_eigenvalue_hermitian() / scale);
    }
    const bool pass = worst_conv < 1e-6 && worst_odd < 1e-9 && worst_psd <= 1e-12;
    return {pass, fmt("coth->sgn max rel %.2e (tol 1e-6); rho_h oddness %.2e; min eigenvalue/scale %.2e on 1e4 draws",
                      worst_conv, worst_odd, -worst_psd)};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all = {
        {1, "threshold exactness", 30, threshold_exactness},
        {2, "Jacobian oracle", 5, jacobian_oracle},
        {3, "pole-solver residuals", 5, pole_residuals},
        {4, "decoupling oracle", 2, decoupling},
        {5, "narrow-width convergence", 300, narrow_width},
        {6, "separation decay", 120, separation_decay},
        {7, "non-monotonic mu dependence", 600, mu_nonmonotonic},
        {8, "threshold-separation independence", 300, threshold_separation},
        {9, "platform onset universality", 300, platforms},
        {10, "Hadamard/FDT suite", 60, hadamard_suite},
    };
    int failed = 0;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = o.pass && secs < c.budget_s;
        failed += !ok;
        std::printf("%s criterion %2d (%s): %s [%.2f s, budget %.0f s]\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), secs, c.budget_s);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed == 0 ? 0 : 1;
}
