#include "decoshell/selftest.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "decoshell/errors.hpp"
#include "decoshell/propagator.hpp"
#include "decoshell/rates.hpp"
#include "decoshell/resonance.hpp"

namespace decoshell {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

double log_uniform(Rng& rng, double lo, double hi) { return std::exp(uniform(rng, std::log(lo), std::log(hi))); }

ModelParams condensed_draw(Rng& rng) {
    ModelParams p;
    p.u_phi = log_uniform(rng, 0.003, 0.05);
    p.m_phi = log_uniform(rng, 0.3, 2.0) / p.u_phi;
    p.u_psi = uniform(rng, 0.7, 1.3);
    p.m_psi = uniform(rng, 0.1, 0.6);
    p.lambda_psi = uniform(rng, 1.0, 8.0);
    p.mu = uniform(rng, 1.0, 3.0);
    p.e_charge = uniform(rng, 0.3, 1.5);
    p.g_A = uniform(rng, 0.5, 1.5);
    p.g_B = uniform(rng, 0.5, 1.5);
    p.a_sep = uniform(rng, 0.5, 3.0);
    p.m_H = uniform(rng, 15.0, 50.0);
    return p;
}

SelftestCheck pole_residuals(Rng& rng) {
    SelftestCheck c{"pole_residuals", true, ""};
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
        const double kappa2 = log_uniform(rng, 1e-3, 1e3);
        double re = uniform(rng, -1e3, 1e3);
        if (i % 4 == 0) re = kappa2 * (1.0 + uniform(rng, -1e-9, 1e-9));
        const double cm = i % 4 == 0 ? log_uniform(rng, 1e-8, 1e-4) : log_uniform(rng, 1e-3, 1e2);
        const cplx dh{re, uniform(rng, -1e-3, 1e-3)};
        const Branches b = solve_branches(dh, kappa2, cm);
        for (cplx g : {b.gamma1, b.gamma2}) worst = std::max(worst, pole_residual_scaled(g * g, dh, kappa2, cm));
    }
    c.passed = worst < 1e-10;
    std::ostringstream os;
    os << "max scaled residual " << worst;
    c.detail = os.str();
    return c;
}

SelftestCheck threshold_exactness(Rng& rng) {
    SelftestCheck c{"threshold_exactness", true, ""};
    int bad = 0;
    for (int i = 0; i < 20; ++i) {
        ModelParams p = condensed_draw(rng);
        const DerivedParams d = derive_condensate(p);
        p.v_rel = 2.0 * p.u_phi * (i == 0 ? 1.0 : uniform(rng, 0.1, 1.0));
        const RateResult below = rate_resonant(p, d);
        if (below.value != 0.0 || below.n_evals != 0) ++bad;
        p.v_rel = 2.0 * p.u_phi * uniform(rng, 1.05, 3.0);
        if (!(rate_resonant(p, d).value > 0.0)) ++bad;
    }
    c.passed = bad == 0;
    c.detail = std::to_string(bad) + " violations in 40 evaluations";
    return c;
}

SelftestCheck jacobian(Rng& rng, double perturbation) {
    SelftestCheck c{"jacobian_check", true, ""};
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        ModelParams p = condensed_draw(rng);
        p.v_rel = 2.0 * p.u_phi * uniform(rng, 1.05, 5.0);
        const double ky = uniform(rng, -3.0, 3.0);
        const ShellPoint s = shell_point(p, ky);
        const double slope = 1.0 / s.jacobian_w;
        const double diff = jacobian_check(p, ky) - slope * perturbation;
        worst = std::max(worst, std::abs(diff) / slope);
    }
    c.passed = worst < 1e-6;
    std::ostringstream os;
    os << "max relative slope error " << worst;
    c.detail = os.str();
    return c;
}

SelftestCheck decoupling(Rng& rng) {
    SelftestCheck c{"decoupling_limit", true, ""};
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        KernelPoint kp;
        kp.delta_h = log_uniform(rng, 1e-2, 1e3);
        kp.kappa = std::sqrt(log_uniform(rng, 1e-2, 1e3));
        kp.eps_ret = 0.0;
        const double a = uniform(rng, 0.0, 5.0);
        const Branches b = solve_branches(kp, 0.0);
        const double g = std::sqrt(kp.delta_h);
        const double expect = std::exp(-g * a) / (2.0 * g);
        worst = std::max(worst, std::abs(std::abs(g_inter(b, kp, a)) - expect) / expect);
    }
    c.passed = worst < 1e-12;
    std::ostringstream os;
    os << "max relative deviation " << worst;
    c.detail = os.str();
    return c;
}

}  // namespace

bool SelftestReport::passed() const { return first_failure().empty(); }

std::string SelftestReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed) return c.name;
    return {};
}

SelftestReport run_selftest(std::ostream& log, const SelftestOptions& opt) {
    Rng rng(opt.seed);
    SelftestReport rep;
    auto guarded = [&](const char* name, auto&& fn) {
        SelftestCheck c;
        try {
            c = fn();
        } catch (const std::exception& e) {
            c = {name, false, std::string("exception: ") + e.what()};
        }
        log << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        rep.checks.push_back(c);
    };
    guarded("pole_residuals", [&] { return pole_residuals(rng); });
    guarded("threshold_exactness", [&] { return threshold_exactness(rng); });
    guarded("jacobian_check", [&] { return jacobian(rng, opt.jacobian_perturbation); });
    guarded("decoupling_limit", [&] { return decoupling(rng); });
    return rep;
}

}  // namespace decoshell
