#include "decoshell/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace decoshell::svg {

namespace {

constexpr double kW = 640, kH = 420;
constexpr double kLeft = 80, kRight = 170, kTop = 40, kBottom = 60;

const std::array<const char*, 8> kColors = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                            "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string esc(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string tick(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void settle() {
        if (!(lo <= hi)) lo = 0, hi = 1;
        if (hi == lo) {
            const double pad = lo == 0 ? 1.0 : 0.05 * std::abs(lo);
            lo -= pad;
            hi += pad;
        }
    }
};

void frame(std::ostringstream& os, const std::string& title, const std::string& xl, const std::string& yl,
           const Range& xr, const Range& yr) {
    const double pw = kW - kLeft - kRight, ph = kH - kTop - kBottom;
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"#333\"/>\n";
    os << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
       << esc(title) << "</text>\n";
    os << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kH - 15)
       << "\" text-anchor=\"middle\" font-size=\"13\">" << esc(xl) << "</text>\n";
    os << "<text x=\"18\" y=\"" << num(kTop + ph / 2) << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
       << num(kTop + ph / 2) << ")\">" << esc(yl) << "</text>\n";
    for (int i = 0; i <= 4; ++i) {
        const double t = i / 4.0;
        const double px = kLeft + t * pw, py = kTop + ph - t * ph;
        os << "<text x=\"" << num(px) << "\" y=\"" << num(kTop + ph + 16)
           << "\" text-anchor=\"middle\" font-size=\"11\">" << tick(xr.lo + t * (xr.hi - xr.lo)) << "</text>\n";
        os << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(py + 4)
           << "\" text-anchor=\"end\" font-size=\"11\">" << tick(yr.lo + t * (yr.hi - yr.lo)) << "</text>\n";
    }
}

std::string header() {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
       << "\" viewBox=\"0 0 " << kW << ' ' << kH << "\" font-family=\"sans-serif\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    return os.str();
}

}  // namespace

std::string line_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                       const std::vector<double>& x, const std::vector<Series>& series) {
    Range xr, yr;
    for (double v : x) xr.add(v);
    for (const auto& s : series)
        for (double v : s.y) yr.add(v);
    xr.settle();
    yr.settle();
    const double pw = kW - kLeft - kRight, ph = kH - kTop - kBottom;
    auto px = [&](double v) { return kLeft + (v - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto py = [&](double v) { return kTop + ph - (v - yr.lo) / (yr.hi - yr.lo) * ph; };

    std::ostringstream os;
    os << header();
    frame(os, title, x_label, y_label, xr, yr);
    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* color = kColors[si % kColors.size()];
        std::string pts;
        auto flush = [&] {
            if (!pts.empty())
                os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.6\" points=\"" << pts
                   << "\"/>\n";
            pts.clear();
        };
        const auto& y = series[si].y;
        for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
            if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
                flush();
                continue;
            }
            if (!pts.empty()) pts += ' ';
            pts += num(px(x[i])) + "," + num(py(y[i]));
        }
        flush();
        const double ly = kTop + 14 + 18.0 * static_cast<double>(si);
        os << "<line x1=\"" << num(kW - kRight + 10) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(kW - kRight + 30)
           << "\" y2=\"" << num(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << num(kW - kRight + 35) << "\" y=\"" << num(ly + 4) << "\" font-size=\"11\">"
           << esc(series[si].label) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string heatmap(const std::string& title, const std::string& x_label, const std::string& y_label,
                    const std::vector<double>& x, const std::vector<double>& y,
                    const std::vector<std::vector<double>>& z) {
    Range xr, yr, zr;
    for (double v : x) xr.add(v);
    for (double v : y) yr.add(v);
    for (const auto& row : z)
        for (double v : row) zr.add(v);
    xr.settle();
    yr.settle();
    zr.settle();
    const double pw = kW - kLeft - kRight, ph = kH - kTop - kBottom;
    const double cw = pw / static_cast<double>(std::max<std::size_t>(x.size(), 1));
    const double ch = ph / static_cast<double>(std::max<std::size_t>(y.size(), 1));

    std::ostringstream os;
    os << header();
    for (std::size_t iy = 0; iy < y.size() && iy < z.size(); ++iy) {
        for (std::size_t ix = 0; ix < x.size() && ix < z[iy].size(); ++ix) {
            const double v = z[iy][ix];
            const double t = std::isfinite(v) ? (v - zr.lo) / (zr.hi - zr.lo) : 0.0;
            const int r = static_cast<int>(235 + t * (250 - 235));
            const int g = static_cast<int>(235 - t * (235 - 110));
            const int b = static_cast<int>(235 - t * (235 - 20));
            char fill[16];
            std::snprintf(fill, sizeof fill, "#%02x%02x%02x", r, g, b);
            os << "<rect x=\"" << num(kLeft + ix * cw) << "\" y=\"" << num(kTop + ph - (iy + 1) * ch)
               << "\" width=\"" << num(cw + 0.3) << "\" height=\"" << num(ch + 0.3) << "\" fill=\"" << fill
               << "\"/>\n";
        }
    }
    frame(os, title, x_label, y_label, xr, yr);
    os << "<text x=\"" << num(kW - kRight + 10) << "\" y=\"" << num(kTop + 14) << "\" font-size=\"11\">max "
       << tick(zr.hi) << "</text>\n";
    os << "<text x=\"" << num(kW - kRight + 10) << "\" y=\"" << num(kTop + 32) << "\" font-size=\"11\">min "
       << tick(zr.lo) << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace decoshell::svg
