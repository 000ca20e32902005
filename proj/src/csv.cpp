#include "decoshell/csv.hpp"

#include <cmath>
#include <cstdio>

namespace decoshell::csv {

std::string number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", x);
    return buf;
}

std::string field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_row(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << ',';
        os << field(cells[i]);
    }
    os << "\r\n";
}

void write_numeric(std::ostream& os, const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& rows) {
    write_row(os, header);
    std::vector<std::string> cells;
    for (const auto& r : rows) {
        cells.clear();
        for (double x : r) cells.push_back(number(x));
        write_row(os, cells);
    }
}

}  // namespace decoshell::csv
