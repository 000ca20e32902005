#include <doctest.h>

#include <cmath>

#include "decoshell/kernels.hpp"
#include "decoshell/rates.hpp"
#include "generators.hpp"

using namespace decoshell;

TEST_CASE("property: threshold exactness over random condensed draws") {
    gen::Gen g(81);
    for (int i = 0; i < 60; ++i) {
        ModelParams p = g.condensed();
        const DerivedParams d = derive_condensate(p);
        p.v_rel = 2 * p.u_phi * g.ratio_below();
        CHECK(rate_resonant(p, d).value == 0.0);
        p.v_rel = 2 * p.u_phi * g.ratio_above();
        CHECK(rate_resonant(p, d).value > 0.0);
    }
}

TEST_CASE("property: rates are non-negative with non-negative error estimates") {
    gen::Gen g(82);
    for (int i = 0; i < 40; ++i) {
        ModelParams p = g.condensed();
        p.v_rel = 2 * p.u_phi * g.uniform(0.5, 3.0);
        const DerivedParams d = derive_condensate(p);
        const RateResult r = rate_resonant(p, d);
        CHECK(r.value >= 0.0);
        CHECK(r.abs_err >= 0.0);
        p.gamma_phi = 1e-2 * p.u_phi * p.m_phi * p.u_phi;
        const MomentumPoint k{g.uniform(-2, 2), g.uniform(-2, 2)};
        CHECK(overlap_weight(p, p.v_rel, k) > 0.0);
    }
}

TEST_CASE("property: Hadamard kernel is even in omega") {
    gen::Gen g(83);
    for (int i = 0; i < 500; ++i) {
        ModelParams p = g.condensed();
        if (g.coin()) p.beta = InverseTemperature::finite(g.log_uniform(0.1, 50));
        const DerivedParams d = derive_condensate(p);
        const double w = g.log_uniform(1e-3, 3.0);
        const MomentumPoint k{g.uniform(-2, 2), g.uniform(-2, 2)};
        for (BoundaryPair bp : {BoundaryPair::aa, BoundaryPair::ab}) {
            const double hp = hadamard(d, p, w, k, bp), hm = hadamard(d, p, -w, k, bp);
            CHECK(hp == doctest::Approx(hm).epsilon(1e-9).scale(1e-300));
        }
    }
}

TEST_CASE("property: attenuation grows with separation when both branches are evanescent") {
    gen::Gen g(84);
    for (int i = 0; i < 40; ++i) {
        ModelParams p = g.condensed();
        p.v_rel = 2 * p.u_phi * g.uniform(1.2, 3.0);
        const DerivedParams d = derive_condensate(p);
        const double r1 = rate_resonant(p, d).value;
        p.a_sep += 1.0;
        const double r2 = rate_resonant(p, d).value;
        CHECK(r2 < r1);
    }
}
