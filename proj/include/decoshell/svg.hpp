#pragma once

#include <string>
#include <vector>

namespace decoshell::svg {

struct Series {
    std::string label;
    std::vector<double> y;
};

/// Polyline chart sharing one x axis. Non-finite points break the line.
std::string line_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                       const std::vector<double>& x, const std::vector<Series>& series);

/// Cell map of z[iy][ix] on a linear gray-to-orange scale.
std::string heatmap(const std::string& title, const std::string& x_label, const std::string& y_label,
                    const std::vector<double>& x, const std::vector<double>& y,
                    const std::vector<std::vector<double>>& z);

}  // namespace decoshell::svg
