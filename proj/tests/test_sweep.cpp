#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "decoshell/csv.hpp"
#include "decoshell/errors.hpp"
#include "decoshell/platforms.hpp"
#include "decoshell/sweep.hpp"
#include "generators.hpp"

using namespace decoshell;

namespace {

RunConfig reference_config() {
    RunConfig c;
    c.model = gen::reference();
    return c;
}

std::string table_bytes(const GridTable& t) {
    std::ostringstream os;
    for (const auto& r : t.rows) {
        std::vector<std::string> cells;
        for (double x : r.coords) cells.push_back(csv::number(x));
        cells.push_back(csv::number(r.value));
        cells.push_back(r.error);
        csv::write_row(os, cells);
    }
    return os.str();
}

}  // namespace

TEST_CASE("axis values") {
    const Axis lin{"a_sep", 0.5, 3.0, 101};
    const auto v = lin.values();
    CHECK(v.size() == 101);
    CHECK(v[20] == 1.0);
    CHECK(v.back() == 3.0);
    const Axis lg{"mu", 1.0, 100.0, 3, AxisScale::log};
    CHECK(lg.values()[1] == doctest::Approx(10.0));
    CHECK_THROWS_AS((Axis{"mu", 1.0, 1.0, 3}.validate()), ParamError);
    CHECK_THROWS_AS((Axis{"mu", 0.0, 1.0, 1}.validate()), ParamError);
    CHECK_THROWS_AS((Axis{"mu", 0.0, 1.0, 4, AxisScale::log}.validate()), ParamError);
}

TEST_CASE("grid rows are axis-major and threshold-exact") {
    Grid g{{{"a_sep", 1.0, 2.0, 2}, {kVRatioAxis, 0.5, 2.0, 4}}, {}};
    const GridTable t = run_grid(g, Quantity::resonant, reference_config());
    REQUIRE(t.rows.size() == 8);
    CHECK(t.rows[0].coords == std::vector<double>{1.0, 0.5});
    CHECK(t.rows[1].coords == std::vector<double>{1.0, 1.0});
    CHECK(t.rows[4].coords == std::vector<double>{2.0, 0.5});
    for (const auto& r : t.rows) {
        REQUIRE(r.ok());
        if (r.coords[1] <= 1.0)
            CHECK(r.value == 0.0);
        else
            CHECK(r.value > 0.0);
    }
}

TEST_CASE("serial and parallel sweeps give identical bytes") {
    Grid g{{{kVRatioAxis, 0.8, 3.0, 9}, {"e_charge", 0.5, 2.0, 3}}, {{"a_sep", "1.5"}}};
    const RunConfig cfg = reference_config();
    const GridTable a = run_grid(g, Quantity::resonant, cfg, ExecPolicy::serial);
    const GridTable b = run_grid(g, Quantity::resonant, cfg, ExecPolicy::parallel);
    CHECK(table_bytes(a) == table_bytes(b));
    const GridTable c = run_grid(g, Quantity::resonant, cfg, ExecPolicy::serial);
    CHECK(table_bytes(a) == table_bytes(c));
}

TEST_CASE("per-point failures stay in their row") {
    Grid g{{{"mu", 0.1, 2.0, 3}}, {{"v_rel", "0.05"}}};
    const GridTable t = run_grid(g, Quantity::resonant, reference_config(), ExecPolicy::parallel);
    CHECK_FALSE(t.rows[0].ok());
    CHECK(t.rows[0].error_kind == PointError::phase);
    CHECK(t.rows[2].ok());
    CHECK(t.rows[2].value > 0.0);

    Grid bad{{{"no_such_key", 0.0, 1.0, 2}}, {}};
    const GridTable u = run_grid(bad, Quantity::resonant, reference_config());
    CHECK_FALSE(u.rows[0].ok());
}

TEST_CASE("coherence quantity") {
    RunConfig cfg = reference_config();
    cfg.history.duration_T = 1e15;
    Grid g{{{kVRatioAxis, 0.5, 2.0, 4}}, {}};
    const GridTable t = run_grid(g, Quantity::coherence, cfg);
    CHECK(t.rows[0].value == 1.0);
    CHECK(t.rows[3].value < 1.0);
    CHECK(t.rows[3].value > 0.0);
    CHECK(quantity_from_string("regularized") == Quantity::regularized);
    CHECK_THROWS_AS(quantity_from_string("bogus"), ConfigError);
}

TEST_CASE("peak over v agrees with a dense scan") {
    const RunConfig cfg = reference_config();
    const PeakResult pk = peak_over_v(cfg, 1.05, 6.0);
    CHECK(pk.v_ratio > 1.05);
    CHECK(pk.v_ratio < 6.0);
    CHECK(pk.v_peak == doctest::Approx(pk.v_ratio * 2 * cfg.model.u_phi));

    const DerivedParams d = derive_condensate(cfg.model);
    double dense = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        ModelParams p = cfg.model;
        p.v_rel = 2 * p.u_phi * (1.05 + (6.0 - 1.05) * i / (n - 1.0));
        dense = std::max(dense, rate_resonant(p, d).value);
    }
    CHECK(pk.r_max == doctest::Approx(dense).epsilon(1e-4));
    CHECK(pk.r_max >= dense * (1 - 1e-6));
}

TEST_CASE("peak finder refuses flat and monotone ranges") {
    const RunConfig cfg = reference_config();
    CHECK_THROWS_AS(peak_over_v(cfg, 0.2, 1.0 + 1e-12), NoPeakError);
    CHECK_THROWS_AS(peak_over_v(cfg, 1.02, 1.1), NoPeakError);
    CHECK_THROWS_AS(peak_over_v(cfg, 0.2, 0.9), ParamError);
}

TEST_CASE("platform registry") {
    const auto reg = platform_registry();
    REQUIRE(reg.size() == 4);
    CHECK(find_platform("bec").a_over_xi() == doctest::Approx(16.0));
    CHECK(find_platform("cold_atoms").a_over_xi() == doctest::Approx(6.67).epsilon(1e-3));
    CHECK(find_platform("graphene").a_over_xi() == doctest::Approx(0.667).epsilon(1e-3));
    CHECK(find_platform("plasmonic").a_over_xi() == doctest::Approx(2.0));
    CHECK(find_platform("bec").u_phi_si == 2.0e-3);
    CHECK(find_platform("plasmonic").u_phi_si == 2.41e7);
    CHECK_THROWS_AS(find_platform("vacuum"), ConfigError);

    const ModelParams m = platform_model(gen::reference(), find_platform("bec"));
    CHECK(derive_condensate(m).m_A == doctest::Approx(1.0));
    CHECK(m.a_sep == doctest::Approx(16.0));
}

TEST_CASE("platform curves are normalized with a shared onset") {
    std::vector<double> xs;
    for (int i = 0; i <= 30; ++i) xs.push_back(0.5 + 0.1 * i);
    xs[5] = 1.0;
    const auto curves = platform_curves(platform_registry(), xs, reference_config(), ExecPolicy::parallel);
    REQUIRE(curves.size() == 4);
    for (const auto& c : curves) {
        CHECK(*std::max_element(c.normalized.begin(), c.normalized.end()) == 1.0);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (xs[i] <= 1.0)
                CHECK(c.normalized[i] == 0.0);
            else
                CHECK(c.normalized[i] > 0.0);
        }
    }
    CHECK_THROWS_AS(platform_curves({}, xs, reference_config()), ParamError);
}
