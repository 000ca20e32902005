#include "decoshell/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "decoshell/errors.hpp"

namespace decoshell {

namespace {

std::string trim(const std::string& s) {
    auto b = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
    auto e = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) { return std::isspace(c); }).base();
    return b < e ? std::string(b, e) : std::string();
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

double parse_double(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    const std::string lv = lower(v);
    if (lv == "inf" || lv == "+inf" || lv == "infinity") return std::numeric_limits<double>::infinity();
    double out = 0.0;
    const char* first = v.data();
    const char* last = v.data() + v.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last || v.empty())
        throw ConfigError("cannot parse value '" + value + "' for key '" + key + "'");
    return out;
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

Setter field(double ModelParams::*m) {
    return [m](RunConfig& c, const std::string& k, const std::string& v) { c.model.*m = parse_double(k, v); };
}
Setter numeric(double Numerics::*m) {
    return [m](RunConfig& c, const std::string& k, const std::string& v) { c.numerics.*m = parse_double(k, v); };
}
Setter hist(double History::*m) {
    return [m](RunConfig& c, const std::string& k, const std::string& v) { c.history.*m = parse_double(k, v); };
}

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"u_phi", field(&ModelParams::u_phi)},
        {"m_phi", field(&ModelParams::m_phi)},
        {"u_psi", field(&ModelParams::u_psi)},
        {"m_psi", field(&ModelParams::m_psi)},
        {"lambda_psi", field(&ModelParams::lambda_psi)},
        {"mu", field(&ModelParams::mu)},
        {"e_charge", field(&ModelParams::e_charge)},
        {"g_A", field(&ModelParams::g_A)},
        {"g_B", field(&ModelParams::g_B)},
        {"a_sep", field(&ModelParams::a_sep)},
        {"v_rel", field(&ModelParams::v_rel)},
        {"gamma_phi", field(&ModelParams::gamma_phi)},
        {"m_H",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             if (lower(trim(v)) == "auto")
                 c.model.m_H.reset();
             else
                 c.model.m_H = parse_double(k, v);
         }},
        {"beta_inv_temp",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             const double b = parse_double(k, v);
             if (std::isinf(b) && b > 0.0) {
                 c.model.beta = InverseTemperature::zero_temperature();
                 return;
             }
             if (!(b > 0.0)) throw ConfigError("beta_inv_temp must be > 0 or inf");
             c.model.beta = InverseTemperature::finite(b);
         }},
        {"eps_ret", numeric(&Numerics::eps_ret)},
        {"tol_deg", numeric(&Numerics::tol_deg)},
        {"rel_tol", numeric(&Numerics::rel_tol)},
        {"abs_tol", numeric(&Numerics::abs_tol)},
        {"max_evals",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             const double n = parse_double(k, v);
             if (!(n >= 1.0) || n > 1e15 || n != std::floor(n))
                 throw ConfigError("max_evals must be a positive integer");
             c.numerics.max_evals = static_cast<std::size_t>(n);
         }},
        {"delta_A", hist(&History::delta_A)},
        {"delta_B", hist(&History::delta_B)},
        {"duration_T", hist(&History::duration_T)},
        {"area", hist(&History::area)},
        {"m_gap", [](RunConfig& c, const std::string& k, const std::string& v) { c.m_gap = parse_double(k, v); }},
    };
    return table;
}

}  // namespace

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
    const std::string k = trim(key);
    const auto& table = setters();
    auto it = table.find(k);
    if (it == table.end()) throw ConfigError("unknown config key '" + k + "'");
    try {
        it->second(cfg, k, value);
    } catch (const ParamError& e) {
        throw ConfigError("key '" + k + "': " + e.what());
    }
}

std::pair<std::string, std::string> split_assignment(const std::string& s) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key=value, got '" + s + "'");
    return {trim(s.substr(0, eq)), trim(s.substr(eq + 1))};
}

void apply_config_text(RunConfig& cfg, const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        try {
            auto [k, v] = split_assignment(line);
            apply_setting(cfg, k, v);
        } catch (const ConfigError& e) {
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    apply_config_text(cfg, ss.str(), path);
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
    RunConfig cfg;
    if (!path.empty()) apply_config_file(cfg, path);
    for (const auto& o : overrides) {
        auto [k, v] = split_assignment(o);
        apply_setting(cfg, k, v);
    }
    return cfg;
}

std::vector<std::string> config_keys() {
    std::vector<std::string> keys;
    for (const auto& [k, _] : setters()) keys.push_back(k);
    return keys;
}

}  // namespace decoshell
