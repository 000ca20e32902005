// Serial reference vs OpenMP execution of the sweep and the regularized rate.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "decoshell/config.hpp"
#include "decoshell/rates.hpp"
#include "decoshell/sweep.hpp"

using namespace decoshell;

namespace {

template <class F>
double seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 1;
    RunConfig cfg;
    cfg.model.m_H = 40.0;
    std::printf("threads available: %d\n", omp_get_max_threads());

    Grid g{{{kVRatioAxis, 0.5, 3.0, 41, AxisScale::linear}, {"a_sep", 1.0, 4.0, 4, AxisScale::linear}}, {}};
    double ts = 0, tp = 0;
    bool same = true;
    for (int r = 0; r < reps; ++r) {
        GridTable a, b;
        ts += seconds([&] { a = run_grid(g, Quantity::resonant, cfg, ExecPolicy::serial); });
        tp += seconds([&] { b = run_grid(g, Quantity::resonant, cfg, ExecPolicy::parallel); });
        for (std::size_t i = 0; i < a.rows.size(); ++i) same = same && a.rows[i].value == b.rows[i].value;
    }
    std::printf("sweep (%zu points)      serial %.3f s  parallel %.3f s  speedup %.2f  identical %s\n", g.size(),
                ts / reps, tp / reps, ts / tp, same ? "yes" : "no");

    ModelParams p = cfg.model;
    p.v_rel = 4.0 * p.u_phi;
    const DerivedParams d = derive_condensate(p);
    p.gamma_phi = 1e-2 * shell_point(p, 0.0).omega_star;
    Numerics ser, par;
    par.exec = ExecPolicy::parallel;
    RateResult ra, rb;
    ts = seconds([&] { ra = rate_regularized(p, d, ser); });
    tp = seconds([&] { rb = rate_regularized(p, d, par); });
    std::printf("rate_regularized        serial %.3f s  parallel %.3f s  speedup %.2f  identical %s\n", ts, tp,
                ts / tp, ra.value == rb.value ? "yes" : "no");
    return 0;
}
