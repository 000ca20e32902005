#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace decoshell::csv {

/// Scientific notation with 12 significant digits; "nan", "inf", "-inf" otherwise.
std::string number(double x);

/// RFC 4180 field: quoted when it holds a comma, quote, CR or LF.
std::string field(const std::string& s);

void write_row(std::ostream& os, const std::vector<std::string>& cells);

/// Header row followed by numeric rows.
void write_numeric(std::ostream& os, const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& rows);

}  // namespace decoshell::csv
