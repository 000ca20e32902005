#pragma once

#include <span>
#include <string>
#include <vector>

#include "decoshell/config.hpp"

namespace decoshell {

/// Representative platform scales, SI units.
struct PlatformPreset {
    std::string key;   // short id used on the command line
    std::string name;  // display name
    double u_phi_si;   // boundary-mode velocity, m/s
    double a_si;       // separation, m
    double xi_si;      // attenuation length, m

    double a_over_xi() const { return a_si / xi_si; }
};

/// BEC, cold atoms, graphene, plasmonic, in that order.
std::span<const PlatformPreset> platform_registry();

/// Throws ConfigError for an unknown key.
const PlatformPreset& find_platform(const std::string& key);

/// Model-unit parameters for a preset: lengths in units of xi, the charge set
/// so that m_A xi = 1, a_sep = a/xi, u_phi kept at the template value (curves
/// are compared at equal v / 2u_phi). The rest comes from the template.
ModelParams platform_model(const ModelParams& base, const PlatformPreset& preset);

}  // namespace decoshell
