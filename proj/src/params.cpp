#include "decoshell/params.hpp"

#include <cmath>
#include <sstream>

#include "decoshell/errors.hpp"
#include "decoshell/resonance.hpp"

namespace decoshell {

InverseTemperature InverseTemperature::finite(double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw ParamError("inverse temperature must be finite and positive");
    InverseTemperature t;
    t.beta_ = beta;
    return t;
}

double InverseTemperature::beta() const {
    if (!beta_) throw ParamError("zero temperature has no finite beta");
    return *beta_;
}

void ModelParams::validate() const {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw ParamError(what);
    };
    require(u_phi > 0.0, "u_phi must be > 0");
    require(u_psi > 0.0, "u_psi must be > 0");
    require(lambda_psi > 0.0, "lambda_psi must be > 0");
    require(a_sep >= 0.0, "a_sep must be >= 0");
    require(gamma_phi >= 0.0, "gamma_phi must be >= 0");
    require(m_phi >= 0.0, "m_phi must be >= 0");
    require(v_rel >= 0.0, "v_rel must be >= 0");
    if (m_H) require(*m_H >= 0.0, "m_H must be >= 0");
}

double condensate_rho0_squared(const ModelParams& p) {
    const double u2 = p.u_psi * p.u_psi;
    return 4.0 / p.lambda_psi * (p.mu * p.mu / u2 - p.m_psi * p.m_psi * u2);
}

DerivedParams derive_condensate(const ModelParams& p) {
    p.validate();
    const double rho2 = condensate_rho0_squared(p);
    if (!(rho2 > 0.0)) {
        std::ostringstream os;
        os << "rho0^2 = " << rho2 << " <= 0: medium is in the symmetric phase";
        throw PhaseError(os.str());
    }
    DerivedParams d;
    d.rho0 = std::sqrt(rho2);
    d.lambda_A = p.g_A * d.rho0;
    d.lambda_B = p.g_B * d.rho0;
    d.m_A = p.e_charge * d.rho0 / p.u_psi;
    d.c_mix = 2.0 * p.mu * p.e_charge * d.rho0 / (p.u_psi * p.u_psi);
    d.m_H = p.m_H ? *p.m_H : std::sqrt(p.lambda_psi * rho2 / 2.0);
    return d;
}

std::vector<RegimeWarning> validate_regime(const ModelParams& p, const DerivedParams& d,
                                           std::optional<double> omega_star) {
    std::vector<RegimeWarning> out;
    if (p.v_rel >= kVelocityWarnThreshold || p.u_phi >= kVelocityWarnThreshold) {
        std::ostringstream os;
        os << "velocity outside the nonrelativistic window (v_rel=" << p.v_rel
           << ", u_phi=" << p.u_phi << ", warn at >= " << kVelocityWarnThreshold << ")";
        out.push_back({RegimeWarningKind::velocity, os.str()});
    }
    if (omega_star && *omega_star > kQuasiStaticWarnFraction * d.m_A) {
        std::ostringstream os;
        os << "shell frequency " << *omega_star << " exceeds " << kQuasiStaticWarnFraction
           << " m_A = " << kQuasiStaticWarnFraction * d.m_A << "; quasi-static screening is questionable";
        out.push_back({RegimeWarningKind::quasi_static, os.str()});
    }
    return out;
}

std::vector<RegimeWarning> validate_regime(const ModelParams& p, const DerivedParams& d) {
    std::optional<double> omega_star;
    if (above_threshold(p)) omega_star = shell_point(p, 0.0).omega_star;
    return validate_regime(p, d, omega_star);
}

}  // namespace decoshell
