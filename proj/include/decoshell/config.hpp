#pragma once

#include <string>
#include <utility>
#include <vector>

#include "decoshell/dynamics.hpp"
#include "decoshell/params.hpp"

namespace decoshell {

/// Everything a run reads from a config file plus command-line overrides.
struct RunConfig {
    ModelParams model;
    Numerics numerics;
    History history;
    double m_gap = 1.0;  // symmetric-phase gap for the stand-in kernel
};

/// Applies one key=value assignment. Throws ConfigError for unknown keys or
/// unparsable values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

/// Parses "key = value" lines; '#' starts a comment, blank lines are skipped.
void apply_config_text(RunConfig& cfg, const std::string& text, const std::string& origin = "<text>");

/// Reads a file with apply_config_text. Throws ConfigError if unreadable.
void apply_config_file(RunConfig& cfg, const std::string& path);

/// Splits "key=value"; throws ConfigError without '='.
std::pair<std::string, std::string> split_assignment(const std::string& s);

/// Builds a config: defaults, then the file (if any), then overrides in order.
RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides);

/// Lists all recognized keys.
std::vector<std::string> config_keys();

}  // namespace decoshell
