#include "decoshell/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "decoshell/dynamics.hpp"
#include "decoshell/errors.hpp"

namespace decoshell {

namespace {

std::string exact_string(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

double resonant_value(const RunConfig& cfg) {
    const DerivedParams d = derive_condensate(cfg.model);
    return rate_resonant(cfg.model, d, cfg.numerics).value;
}

}  // namespace

void Axis::validate() const {
    if (count < 2) throw ParamError("axis '" + name + "' needs count >= 2");
    if (!(max > min)) throw ParamError("axis '" + name + "' needs max > min");
    if (scale == AxisScale::log && !(min > 0.0)) throw ParamError("log axis '" + name + "' needs min > 0");
}

std::vector<double> Axis::values() const {
    validate();
    std::vector<double> out(count);
    const double n1 = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        const double t = static_cast<double>(i);
        if (scale == AxisScale::linear)
            out[i] = min + (max - min) * t / n1;
        else
            out[i] = std::exp(std::log(min) + (std::log(max) - std::log(min)) * t / n1);
    }
    out.back() = max;
    return out;
}

void Grid::validate() const {
    if (axes.empty()) throw ParamError("grid has no axes");
    for (const auto& a : axes) a.validate();
}

std::size_t Grid::size() const {
    std::size_t n = 1;
    for (const auto& a : axes) n *= a.count;
    return n;
}

std::string to_string(Quantity q) {
    switch (q) {
        case Quantity::resonant: return "resonant";
        case Quantity::regularized: return "regularized";
        case Quantity::im_gamma: return "im_gamma";
        case Quantity::coherence: return "coherence";
    }
    return "unknown";
}

Quantity quantity_from_string(const std::string& s) {
    for (Quantity q : {Quantity::resonant, Quantity::regularized, Quantity::im_gamma, Quantity::coherence})
        if (to_string(q) == s) return q;
    throw ConfigError("unknown quantity '" + s + "' (resonant, regularized, im_gamma, coherence)");
}

RunConfig config_at(const RunConfig& base, const Grid& g, std::span<const double> coords) {
    RunConfig cfg = base;
    for (const auto& [k, v] : g.fixed) apply_setting(cfg, k, v);
    std::optional<double> ratio;
    for (std::size_t i = 0; i < g.axes.size(); ++i) {
        if (g.axes[i].name == kVRatioAxis)
            ratio = coords[i];
        else
            apply_setting(cfg, g.axes[i].name, exact_string(coords[i]));
    }
    if (ratio) cfg.model.v_rel = *ratio * 2.0 * cfg.model.u_phi;
    return cfg;
}

GridRow evaluate_point(const RunConfig& cfg, Quantity q) {
    GridRow row;
    try {
        const DerivedParams d = derive_condensate(cfg.model);
        switch (q) {
            case Quantity::resonant: row.rate = rate_resonant(cfg.model, d, cfg.numerics); break;
            case Quantity::im_gamma: row.rate = im_gamma_cross(cfg.model, d, cfg.numerics); break;
            case Quantity::regularized: row.rate = rate_regularized(cfg.model, d, cfg.numerics); break;
            case Quantity::coherence: row.rate = rate_resonant(cfg.model, d, cfg.numerics); break;
        }
        row.value = q == Quantity::coherence ? coherence(cfg.history, row.rate) : row.rate.value;
    } catch (const PhaseError& e) {
        row.error = e.what();
        row.error_kind = PointError::phase;
    } catch (const QuadratureError& e) {
        row.error = e.what();
        row.error_kind = PointError::numeric;
    } catch (const std::exception& e) {
        row.error = e.what();
        row.error_kind = PointError::other;
    }
    return row;
}

GridTable run_grid(const Grid& g, Quantity q, const RunConfig& base, ExecPolicy exec) {
    g.validate();
    GridTable table;
    table.quantity = q;
    std::vector<std::vector<double>> axis_vals;
    for (const auto& a : g.axes) {
        table.axis_names.push_back(a.name);
        axis_vals.push_back(a.values());
    }
    const std::size_t n = g.size();
    table.rows.resize(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        std::size_t rem = idx;
        auto& coords = table.rows[idx].coords;
        coords.resize(g.axes.size());
        for (std::size_t i = g.axes.size(); i-- > 0;) {
            coords[i] = axis_vals[i][rem % g.axes[i].count];
            rem /= g.axes[i].count;
        }
    }

    RunConfig serial_base = base;
    serial_base.numerics.exec = ExecPolicy::serial;
    auto one = [&](std::size_t idx) {
        GridRow& row = table.rows[idx];
        std::vector<double> coords = row.coords;
        try {
            row = evaluate_point(config_at(serial_base, g, coords), q);
        } catch (const std::exception& e) {
            row = GridRow{};
            row.error = e.what();
            row.error_kind = PointError::other;
        }
        row.coords = std::move(coords);
    };
    if (exec == ExecPolicy::parallel) {
        const long nn = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < nn; ++i) one(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i) one(i);
    }
    return table;
}

PeakResult peak_over_v(const RunConfig& base, double ratio_lo, double ratio_hi, std::size_t coarse, double x_tol) {
    if (!(ratio_hi > 1.0)) throw ParamError("peak_over_v: upper end of the range must be above threshold");
    if (!(ratio_hi > ratio_lo) || coarse < 3) throw ParamError("peak_over_v: bad range");
    PeakResult res;
    RunConfig cfg = base;
    auto f = [&](double ratio) {
        cfg.model.v_rel = ratio * 2.0 * base.model.u_phi;
        ++res.n_rate_calls;
        return resonant_value(cfg);
    };

    Axis ax{kVRatioAxis, ratio_lo, ratio_hi, coarse, AxisScale::linear};
    const std::vector<double> xs = ax.values();
    std::vector<double> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = f(xs[i]);
    const auto [mn, mx] = std::minmax_element(ys.begin(), ys.end());
    if (!(*mx > *mn)) throw NoPeakError("resonant rate is flat over the scanned velocity range");
    const std::size_t im = static_cast<std::size_t>(mx - ys.begin());
    if (im == 0 || im + 1 == xs.size()) {
        std::ostringstream os;
        os << "resonant rate is monotone on v/(2u_phi) in [" << ratio_lo << ", " << ratio_hi
           << "]; maximum at the boundary";
        throw NoPeakError(os.str());
    }

    // golden section on the bracket around the coarse maximum
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = xs[im - 1], b = xs[im + 1];
    double c = b - g * (b - a), dd = a + g * (b - a);
    double fc = f(c), fd = f(dd);
    while (b - a > x_tol * std::max(1.0, std::abs(b) + std::abs(a))) {
        if (fc > fd) {
            b = dd;
            dd = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = dd;
            fc = fd;
            dd = a + g * (b - a);
            fd = f(dd);
        }
    }
    double best_x = fc > fd ? c : dd;
    double best_y = std::max(fc, fd);
    if (ys[im] > best_y) {
        best_x = xs[im];
        best_y = ys[im];
    }
    res.v_ratio = best_x;
    res.v_peak = best_x * 2.0 * base.model.u_phi;
    res.r_max = best_y;
    return res;
}

std::vector<PlatformCurve> platform_curves(std::span<const PlatformPreset> presets,
                                           std::span<const double> v_ratio, const RunConfig& base,
                                           ExecPolicy exec) {
    if (presets.empty()) throw ParamError("platform_curves needs at least one preset");
    std::vector<PlatformCurve> out;
    for (const auto& preset : presets) {
        PlatformCurve c;
        c.preset = &preset;
        c.v_ratio.assign(v_ratio.begin(), v_ratio.end());
        c.raw.assign(v_ratio.size(), 0.0);
        RunConfig cfg = base;
        cfg.model = platform_model(base.model, preset);
        cfg.numerics.exec = ExecPolicy::serial;
        const DerivedParams d = derive_condensate(cfg.model);
        const long n = static_cast<long>(v_ratio.size());
        std::exception_ptr first;
        auto one = [&](long i) {
            ModelParams p = cfg.model;
            p.v_rel = v_ratio[i] * 2.0 * p.u_phi;
            c.raw[i] = rate_resonant(p, d, cfg.numerics).value;
        };
        if (exec == ExecPolicy::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
            for (long i = 0; i < n; ++i) {
                try {
                    one(i);
                } catch (...) {
#pragma omp critical(decoshell_platform_error)
                    if (!first) first = std::current_exception();
                }
            }
            if (first) std::rethrow_exception(first);
        } else {
            for (long i = 0; i < n; ++i) one(i);
        }
        const double peak = *std::max_element(c.raw.begin(), c.raw.end());
        c.normalized.resize(c.raw.size());
        for (std::size_t i = 0; i < c.raw.size(); ++i) c.normalized[i] = peak > 0.0 ? c.raw[i] / peak : 0.0;
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace decoshell
