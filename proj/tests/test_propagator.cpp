#include <doctest.h>

#include <cmath>
#include <numbers>

#include "decoshell/errors.hpp"
#include "decoshell/propagator.hpp"
#include "generators.hpp"

using namespace decoshell;

namespace {

KernelPoint bare_point(double delta_h, double kappa, double eps = 0.0) {
    KernelPoint kp;
    kp.delta_h = delta_h;
    kp.kappa = kappa;
    kp.eps_ret = eps;
    return kp;
}

// G(a) = (1/pi) int_0^Q dq cos(q a) (q^2 + kappa^2) / ((q^2 + x1)(q^2 + x2)), composite Simpson.
double fourier_oracle(double x1, double x2, double kappa2, double a) {
    const double q_max = 4000.0;
    const long n = 4'000'000;
    const double h = q_max / n;
    auto f = [&](double q) {
        const double q2 = q * q;
        return std::cos(q * a) * (q2 + kappa2) / ((q2 + x1) * (q2 + x2));
    };
    double s = f(0.0) + f(q_max);
    for (long i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
    return s * h / 3.0 / std::numbers::pi;
}

}  // namespace

TEST_CASE("roots satisfy the biquadratic and carry Re gamma >= 0") {
    gen::Gen g(31);
    for (int i = 0; i < 2000; ++i) {
        const double kappa2 = g.log_uniform(1e-2, 1e3);
        const cplx dh{g.uniform(-200, 200), g.uniform(-1e-2, 1e-2)};
        const double cm = g.log_uniform(1e-3, 50);
        const Branches b = solve_branches(dh, kappa2, cm);
        CHECK(pole_residual_scaled(b.gamma1 * b.gamma1, dh, kappa2, cm) < 1e-12);
        CHECK(pole_residual_scaled(b.gamma2 * b.gamma2, dh, kappa2, cm) < 1e-12);
        CHECK(b.gamma1.real() >= 0.0);
        CHECK(b.gamma2.real() >= 0.0);
        // Vieta
        const cplx sum = b.gamma1 * b.gamma1 + b.gamma2 * b.gamma2;
        CHECK(std::abs(sum - (dh + kappa2)) <= 1e-12 * (std::abs(dh) + kappa2));
    }
}

TEST_CASE("gamma_1 continues the bare amplitude branch") {
    const Branches b = solve_branches(cplx{100.0, 0.0}, 4.0, 1e-3);
    CHECK(std::abs(b.gamma1 - 10.0) < 1e-6);
    CHECK(std::abs(b.gamma2 - 2.0) < 1e-6);
    const Branches c = solve_branches(cplx{1.0, 0.0}, 25.0, 1e-3);
    CHECK(std::abs(c.gamma1 - 1.0) < 1e-6);
}

TEST_CASE("branch classification") {
    // default m_H at k = 0, omega = 0: Delta kappa^2 < C^2, one propagating branch
    ModelParams p;
    const DerivedParams d = derive_condensate(p);
    const KernelPoint kp = kernel_point(d, p, 0.0, {0.0, 0.0});
    const Branches b = solve_branches(kp, d.c_mix);
    CHECK((b.kind1 == BranchKind::propagating || b.kind2 == BranchKind::propagating));

    ModelParams q = gen::reference();
    const DerivedParams dq = derive_condensate(q);
    const Branches bq = solve_branches(kernel_point(dq, q, 0.0, {0.0, 0.0}), dq.c_mix);
    CHECK(bq.kind1 == BranchKind::evanescent);
    CHECK(bq.kind2 == BranchKind::evanescent);
}

TEST_CASE("decoupled limit") {
    gen::Gen g(32);
    for (int i = 0; i < 500; ++i) {
        const KernelPoint kp = bare_point(g.log_uniform(1e-2, 1e3), std::sqrt(g.log_uniform(1e-2, 1e3)));
        const double a = g.uniform(0.0, 6.0);
        const double gm = std::sqrt(kp.delta_h);
        const cplx got = g_inter(solve_branches(kp, 0.0), kp, a);
        const double want = std::exp(-gm * a) / (2.0 * gm);
        CHECK(std::abs(got - want) <= 1e-13 * want);
    }
}

TEST_CASE("inter-plate amplitude matches the Fourier integral of the hybridized propagator") {
    struct Case {
        double dh, kappa, c, a;
    } cases[] = {{9.0, 2.0, 1.5, 0.7}, {30.0, 1.0, 4.0, 1.2}, {4.0, 3.0, 0.5, 2.0}, {50.0, 1.0, 6.0, 0.4}};
    for (const auto& cs : cases) {
        const KernelPoint kp = bare_point(cs.dh, cs.kappa);
        const Branches b = solve_branches(kp, cs.c);
        REQUIRE(b.kind1 == BranchKind::evanescent);
        REQUIRE(b.kind2 == BranchKind::evanescent);
        const double x1 = std::norm(b.gamma1), x2 = std::norm(b.gamma2);
        const double oracle = fourier_oracle(x1, x2, cs.kappa * cs.kappa, cs.a);
        const cplx got = g_inter(b, kp, cs.a);
        CHECK(got.real() == doctest::Approx(oracle).epsilon(1e-5));
        CHECK(std::abs(got.imag()) < 1e-14);
    }
}

TEST_CASE("confluent form is the limit of the two-pole form") {
    const double kappa2 = 3.0, c = 0.8, a = 1.3;
    double prev = 1e300;
    for (double eta : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
        // Delta = kappa^2 + 2 i C (1 + eta) puts the roots eta-close to degeneracy
        const cplx dh = cplx(kappa2, 2.0 * c * (1.0 + eta));
        const Branches b = solve_branches(dh, kappa2, c, 0.0);
        REQUIRE(!b.degenerate);
        KernelPoint kp = bare_point(kappa2, std::sqrt(kappa2));
        const cplx two_pole = g_inter(b, kp, a);
        const cplx mid = 0.5 * (b.gamma1 * b.gamma1 + b.gamma2 * b.gamma2);
        const double err = std::abs(two_pole - g_inter_confluent(mid, kappa2, a)) / std::abs(two_pole);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 1e-5);
}

TEST_CASE("degenerate roots switch to the confluent form") {
    const double kappa2 = 3.0, c = 0.8;
    const cplx dh = cplx(kappa2, 2.0 * c);
    const Branches b = solve_branches(dh, kappa2, c);
    CHECK(b.degenerate);
    KernelPoint kp = bare_point(kappa2, std::sqrt(kappa2));
    const cplx got = g_inter(b, kp, 0.9);
    CHECK(std::isfinite(got.real()));
    CHECK(std::isfinite(got.imag()));
}

TEST_CASE("same-plate amplitude is the a = 0 value") {
    const KernelPoint kp = bare_point(12.0, 1.7);
    const Branches b = solve_branches(kp, 2.0);
    CHECK(g_same(b, kp) == g_inter(b, kp, 0.0));
}

TEST_CASE("symmetric-phase bulk propagator") {
    ModelParams p;
    p.mu = 0.2;
    p.a_sep = 1.5;
    const double m = 2.0;
    const double kt = std::sqrt(0.25 + m * m - 0.2 * 0.2);
    CHECK(g_bulk_symmetric(p, 0.0, {0.3, 0.4}, m) == doctest::Approx(std::exp(-kt * 1.5) / (2 * kt)));
    CHECK_THROWS_AS(g_bulk_symmetric(p, 5.0, {0.0, 0.0}, 0.1), EvanescenceError);
}
