#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "decoshell/config.hpp"
#include "decoshell/platforms.hpp"
#include "decoshell/rates.hpp"

namespace decoshell {

enum class AxisScale { linear, log };

/// One grid axis. `name` is a config key or the pseudo-key "v_ratio", which
/// sets v_rel = v_ratio * 2 u_phi after all other assignments.
struct Axis {
    std::string name;
    double min = 0.0;
    double max = 1.0;
    std::size_t count = 2;
    AxisScale scale = AxisScale::linear;

    /// Throws ParamError unless count >= 2 and max > min (and min > 0 for log).
    void validate() const;
    std::vector<double> values() const;
};

inline constexpr const char* kVRatioAxis = "v_ratio";

struct Grid {
    std::vector<Axis> axes;
    /// key=value assignments applied to every point before the axis values.
    std::vector<std::pair<std::string, std::string>> fixed;

    void validate() const;
    std::size_t size() const;
};

enum class Quantity { resonant, regularized, im_gamma, coherence };

std::string to_string(Quantity q);
/// Throws ConfigError for an unknown name.
Quantity quantity_from_string(const std::string& s);

enum class PointError { none, phase, numeric, other };

struct GridRow {
    std::vector<double> coords;  // one per axis, grid order
    RateResult rate;
    double value = 0.0;          // rate value, or the coherence factor
    std::string error;           // empty on success
    PointError error_kind = PointError::none;

    bool ok() const { return error.empty(); }
};

struct GridTable {
    std::vector<std::string> axis_names;
    Quantity quantity = Quantity::resonant;
    std::vector<GridRow> rows;  // axis-major: first axis varies slowest
};

/// Evaluates every grid point. Points run concurrently under
/// ExecPolicy::parallel; row order and contents do not depend on the policy.
GridTable run_grid(const Grid& g, Quantity q, const RunConfig& base, ExecPolicy exec = ExecPolicy::serial);

/// Applies one grid point's axis values to a copy of the config.
RunConfig config_at(const RunConfig& base, const Grid& g, std::span<const double> coords);

/// Evaluates one quantity for a fully specified config.
GridRow evaluate_point(const RunConfig& cfg, Quantity q);

struct PeakResult {
    double v_ratio = 0.0;  // v / (2 u_phi) at the maximum
    double v_peak = 0.0;
    double r_max = 0.0;
    std::size_t n_rate_calls = 0;
};

/// Maximum of the resonant rate over v / (2 u_phi) in [ratio_lo, ratio_hi]:
/// coarse scan, then golden-section refinement. Throws NoPeakError when the
/// coarse maximum sits on the range boundary or the scan is flat.
PeakResult peak_over_v(const RunConfig& base, double ratio_lo, double ratio_hi, std::size_t coarse = 24,
                       double x_tol = 1e-7);

struct PlatformCurve {
    const PlatformPreset* preset = nullptr;
    std::vector<double> v_ratio;
    std::vector<double> raw;         // resonant rate, model units
    std::vector<double> normalized;  // raw / max(raw)
};

/// One resonant-rate curve per preset over v / (2 u_phi), each normalized by
/// its own maximum over the scan.
std::vector<PlatformCurve> platform_curves(std::span<const PlatformPreset> presets,
                                           std::span<const double> v_ratio, const RunConfig& base,
                                           ExecPolicy exec = ExecPolicy::serial);

}  // namespace decoshell
