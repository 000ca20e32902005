#include "decoshell/platforms.hpp"

#include <array>

#include "decoshell/errors.hpp"

namespace decoshell {

namespace {

const std::array<PlatformPreset, 4> kPresets = {{
    {"bec", "BEC", 2.0e-3, 4.0e-6, 0.25e-6},
    {"cold_atoms", "Cold atoms", 1.6e-3, 2.0e-6, 0.3e-6},
    {"graphene", "Graphene (Doppler)", 1.0e6, 20e-9, 30e-9},
    {"plasmonic", "Plasmonic confinement", 2.41e7, 40e-9, 20e-9},
}};

}  // namespace

std::span<const PlatformPreset> platform_registry() { return kPresets; }

const PlatformPreset& find_platform(const std::string& key) {
    for (const auto& p : kPresets)
        if (p.key == key) return p;
    throw ConfigError("unknown platform '" + key + "' (bec, cold_atoms, graphene, plasmonic)");
}

ModelParams platform_model(const ModelParams& base, const PlatformPreset& preset) {
    const DerivedParams d = derive_condensate(base);
    ModelParams p = base;
    p.e_charge = base.u_psi / d.rho0;
    p.a_sep = preset.a_over_xi();
    return p;
}

}  // namespace decoshell
