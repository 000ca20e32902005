#include "decoshell/figures.hpp"

#include <cmath>
#include <sstream>

#include "decoshell/errors.hpp"
#include "decoshell/kernels.hpp"
#include "decoshell/platforms.hpp"
#include "decoshell/rates.hpp"
#include "decoshell/svg.hpp"
#include "decoshell/sweep.hpp"

namespace decoshell {

namespace {

constexpr double kRatioLo = 0.5;
constexpr double kRatioHi = 3.0;

void raise_row_error(const GridTable& t, const GridRow& r) {
    std::ostringstream os;
    os << "grid point";
    for (std::size_t i = 0; i < t.axis_names.size(); ++i) os << ' ' << t.axis_names[i] << '=' << r.coords[i];
    os << ": " << r.error;
    switch (r.error_kind) {
        case PointError::phase: throw PhaseError(os.str());
        case PointError::numeric: throw QuadratureError(os.str());
        default: throw Error(os.str());
    }
}

GridTable checked_grid(const Grid& g, Quantity q, const RunConfig& cfg, ExecPolicy exec) {
    GridTable t = run_grid(g, q, cfg, exec);
    for (const auto& r : t.rows)
        if (!r.ok()) raise_row_error(t, r);
    return t;
}

std::string label(const char* prefix, double x) {
    std::ostringstream os;
    os << prefix << x;
    return os.str();
}

RunConfig above_threshold_config(const RunConfig& cfg) {
    RunConfig c = cfg;
    if (!above_threshold(c.model)) c.model.v_rel = 4.0 * c.model.u_phi;
    return c;
}

FigureData velocity_figure(const RunConfig& cfg, ExecPolicy exec) {
    FigureData f;
    f.title = "Resonant cross-decoherence rate vs velocity";
    f.x_label = "v / (2 u_phi)";
    f.y_label = "R_res";
    f.header = {"v_over_2u_phi", "R_res"};
    Grid g{{{kVRatioAxis, kRatioLo, kRatioHi, 101, AxisScale::linear}}, {}};
    const GridTable t = checked_grid(g, Quantity::resonant, cfg, exec);
    for (const auto& r : t.rows) f.rows.push_back({r.coords[0], r.value});
    return f;
}

FigureData kernel_figure(const RunConfig& cfg) {
    FigureData f;
    f.title = "Cross kernels below and above threshold";
    f.x_label = "omega / omega*";
    f.y_label = "kernel";
    f.header = {"omega_over_omega_star", "Re_DR_AB", "N_AB_below", "N_AB_above"};
    ModelParams above = cfg.model;
    above.v_rel = 1.5 * 2.0 * above.u_phi;
    ModelParams below = above;
    below.v_rel = 0.75 * 2.0 * above.u_phi;
    const DerivedParams d = derive_condensate(above);
    const ShellPoint s = shell_point(above, 0.0);
    const MomentumPoint k{s.kx_star, 0.0};
    const double width = cfg.model.gamma_phi > 0.0 ? cfg.model.gamma_phi : 0.05 * s.omega_star;
    above.gamma_phi = below.gamma_phi = width;
    const int n = 201;
    for (int i = 0; i < n; ++i) {
        const double x = 2.5 * i / (n - 1);
        const double w = x * s.omega_star;
        const double dr = d.lambda_A * d.lambda_B * g_inter_at(d, above, w, k, cfg.numerics).real();
        f.rows.push_back({x, dr, shell_noise_density(below, d, w, k, cfg.numerics),
                          shell_noise_density(above, d, w, k, cfg.numerics)});
    }
    return f;
}

FigureData linewidth_figure(const RunConfig& cfg, ExecPolicy exec) {
    FigureData f;
    f.title = "Regularized rate for several linewidths";
    f.x_label = "v / (2 u_phi)";
    f.y_label = "R_Gamma";
    ModelParams ref = cfg.model;
    ref.v_rel = 2.0 * 2.0 * ref.u_phi;
    const double w_ref = shell_point(ref, 0.0).omega_star;
    const double fractions[] = {1e-1, 1e-2, 1e-3};
    Axis vx{kVRatioAxis, kRatioLo, kRatioHi, 26, AxisScale::linear};
    f.header = {"v_over_2u_phi"};
    for (double fr : fractions) f.header.push_back(label("R_Gamma_", fr) + "_omega_ref");
    f.header.push_back("R_res");
    f.rows.assign(vx.count, std::vector<double>(f.header.size(), 0.0));
    const std::vector<double> xs = vx.values();
    for (std::size_t i = 0; i < xs.size(); ++i) f.rows[i][0] = xs[i];
    for (std::size_t j = 0; j < 3; ++j) {
        RunConfig c = cfg;
        c.model.gamma_phi = fractions[j] * w_ref;
        const GridTable t = checked_grid(Grid{{vx}, {}}, Quantity::regularized, c, exec);
        for (std::size_t i = 0; i < xs.size(); ++i) f.rows[i][j + 1] = t.rows[i].value;
    }
    const GridTable t = checked_grid(Grid{{vx}, {}}, Quantity::resonant, cfg, exec);
    for (std::size_t i = 0; i < xs.size(); ++i) f.rows[i][4] = t.rows[i].value;
    return f;
}

FigureData heatmap_figure(const RunConfig& cfg, ExecPolicy exec) {
    FigureData f;
    f.title = "Resonant rate over velocity and separation";
    f.x_label = "v / (2 u_phi)";
    f.y_label = "a";
    f.heatmap = true;
    f.header = {"v_over_2u_phi", "a", "R_res"};
    Axis va{"a_sep", 0.5, 6.0, 12, AxisScale::linear};
    Axis vx{kVRatioAxis, kRatioLo, kRatioHi, 26, AxisScale::linear};
    const GridTable t = checked_grid(Grid{{va, vx}, {}}, Quantity::resonant, cfg, exec);
    f.hy = va.values();
    f.hx = vx.values();
    f.hz.assign(f.hy.size(), std::vector<double>(f.hx.size(), 0.0));
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& r = t.rows[i];
        f.rows.push_back({r.coords[1], r.coords[0], r.value});
        f.hz[i / f.hx.size()][i % f.hx.size()] = r.value;
    }
    return f;
}

FigureData separation_figure(const RunConfig& cfg, ExecPolicy exec) {
    FigureData f;
    f.title = "Separation dependence for several screening masses";
    f.x_label = "a";
    f.y_label = "R(a) / R(0)";
    const RunConfig c0 = above_threshold_config(cfg);
    Axis va{"a_sep", 0.0, 8.0, 33, AxisScale::linear};
    const std::vector<double> as = va.values();
    f.header = {"a"};
    f.rows.assign(as.size(), {});
    for (std::size_t i = 0; i < as.size(); ++i) f.rows[i].push_back(as[i]);
    for (double scale : {0.5, 1.0, 2.0}) {
        RunConfig c = c0;
        c.model.e_charge = scale * cfg.model.e_charge;
        const double m_a = derive_condensate(c.model).m_A;
        f.header.push_back(label("m_A=", m_a));
        const GridTable t = checked_grid(Grid{{va}, {}}, Quantity::resonant, c, exec);
        const double r0 = t.rows.front().value;
        for (std::size_t i = 0; i < as.size(); ++i) f.rows[i].push_back(r0 > 0.0 ? t.rows[i].value / r0 : 0.0);
    }
    return f;
}

FigureData mu_figure(const RunConfig& cfg, ExecPolicy exec) {
    FigureData f;
    f.title = "Resonant rate vs velocity for several mu";
    f.x_label = "v / (2 u_phi)";
    f.y_label = "R_res";
    Axis vx{kVRatioAxis, kRatioLo, kRatioHi, 51, AxisScale::linear};
    const std::vector<double> xs = vx.values();
    f.header = {"v_over_2u_phi"};
    f.rows.assign(xs.size(), {});
    for (std::size_t i = 0; i < xs.size(); ++i) f.rows[i].push_back(xs[i]);
    for (double mu : {1.0, 2.0, 3.0, 5.0, 8.0}) {
        RunConfig c = cfg;
        c.model.mu = mu;
        f.header.push_back(label("mu=", mu));
        const GridTable t = checked_grid(Grid{{vx}, {}}, Quantity::resonant, c, exec);
        for (std::size_t i = 0; i < xs.size(); ++i) f.rows[i].push_back(t.rows[i].value);
    }
    return f;
}

FigureData peak_figure(const RunConfig& cfg, ExecPolicy exec) {
    FigureData f;
    f.title = "Peak resonant rate vs mu";
    f.x_label = "mu";
    f.y_label = "R_max";
    f.header = {"mu", "v_peak_over_2u_phi", "R_max"};
    Axis mx{"mu", 0.6, 8.0, 16, AxisScale::linear};
    const std::vector<double> mus = mx.values();
    f.rows.assign(mus.size(), {});
    std::exception_ptr first;
    auto one = [&](long i) {
        RunConfig c = cfg;
        c.model.mu = mus[i];
        c.numerics.exec = ExecPolicy::serial;
        try {
            const PeakResult pk = peak_over_v(c, 1.05, 6.0);
            f.rows[i] = {mus[i], pk.v_ratio, pk.r_max};
        } catch (const QuadratureError& e) {
            throw QuadratureError(label("grid point mu=", mus[i]) + ": " + e.what());
        }
    };
    const long n = static_cast<long>(mus.size());
    if (exec == ExecPolicy::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < n; ++i) {
            try {
                one(i);
            } catch (...) {
#pragma omp critical(decoshell_figure_error)
                if (!first) first = std::current_exception();
            }
        }
        if (first) std::rethrow_exception(first);
    } else {
        for (long i = 0; i < n; ++i) one(i);
    }
    return f;
}

FigureData platform_figure(const RunConfig& cfg, ExecPolicy exec) {
    FigureData f;
    f.title = "Normalized resonant rate across platforms";
    f.x_label = "v / (2 u_phi)";
    f.y_label = "R / R_max";
    const std::vector<double> xs = Axis{kVRatioAxis, kRatioLo, kRatioHi, 101, AxisScale::linear}.values();
    const auto curves = platform_curves(platform_registry(), xs, cfg, exec);
    f.header = {"v_over_2u_phi"};
    for (const auto& c : curves) f.header.push_back(c.preset->name);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::vector<double> row{xs[i]};
        for (const auto& c : curves) row.push_back(c.normalized[i]);
        f.rows.push_back(std::move(row));
    }
    return f;
}

}  // namespace

FigureData figure_dataset(int id, const RunConfig& cfg, ExecPolicy exec) {
    FigureData f;
    switch (id) {
        case 4: f = velocity_figure(cfg, exec); break;
        case 5: f = kernel_figure(cfg); break;
        case 6: f = linewidth_figure(cfg, exec); break;
        case 7: f = heatmap_figure(cfg, exec); break;
        case 8: f = separation_figure(cfg, exec); break;
        case 9: f = mu_figure(cfg, exec); break;
        case 10: f = peak_figure(cfg, exec); break;
        case 11: f = platform_figure(cfg, exec); break;
        default: throw ConfigError("figure id must be in 4..11, got " + std::to_string(id));
    }
    f.id = id;
    return f;
}

std::string figure_svg(const FigureData& f) {
    if (f.heatmap) return svg::heatmap(f.title, f.x_label, f.y_label, f.hx, f.hy, f.hz);
    std::vector<double> x;
    for (const auto& r : f.rows) x.push_back(r[0]);
    std::vector<svg::Series> series;
    for (std::size_t j = 1; j < f.header.size(); ++j) {
        svg::Series s{f.header[j], {}};
        for (const auto& r : f.rows) s.y.push_back(r[j]);
        series.push_back(std::move(s));
    }
    return svg::line_chart(f.title, f.x_label, f.y_label, x, series);
}

}  // namespace decoshell
