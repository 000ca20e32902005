#pragma once

#include <string>
#include <vector>

#include "decoshell/config.hpp"

namespace decoshell {

struct FigureData {
    int id = 0;
    std::string title;
    std::string x_label;
    std::string y_label;
    bool heatmap = false;
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    // heatmap only: axis values, z[iy][ix]
    std::vector<double> hx, hy;
    std::vector<std::vector<double>> hz;
};

inline constexpr int kFirstFigure = 4;
inline constexpr int kLastFigure = 11;

/// Builds the dataset behind one figure (4..11). Grid failures are rethrown
/// with the failing point in the message (PhaseError or QuadratureError keep
/// their type). Throws ConfigError for an unknown id.
FigureData figure_dataset(int id, const RunConfig& cfg, ExecPolicy exec = ExecPolicy::serial);

std::string figure_svg(const FigureData& f);

}  // namespace decoshell
