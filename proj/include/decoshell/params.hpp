#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace decoshell {

/// Inverse temperature. Zero temperature is a distinct state rather than a
/// large float so that the sgn(omega) branch of the Hadamard kernel is exact.
class InverseTemperature {
public:
    static constexpr InverseTemperature zero_temperature() { return InverseTemperature{}; }
    static InverseTemperature finite(double beta);

    constexpr bool is_zero_temperature() const { return !beta_.has_value(); }
    /// Only valid when !is_zero_temperature().
    double beta() const;

    friend bool operator==(const InverseTemperature&, const InverseTemperature&) = default;

private:
    constexpr InverseTemperature() = default;
    std::optional<double> beta_;
};

enum class ExecPolicy { serial, parallel };

/// Numerical knobs shared by the propagator, kernel and rate code.
struct Numerics {
    double eps_ret = 1e-9;      // retarded shift omega -> omega + i eps_ret
    double tol_deg = 1e-8;      // relative pole-degeneracy tolerance
    double rel_tol = 1e-6;      // quadrature relative target
    double abs_tol = 0.0;       // quadrature absolute target
    std::size_t max_evals = 1'000'000;
    ExecPolicy exec = ExecPolicy::serial;
};

/// Microscopic inputs, in model units (hbar = c = 1).
struct ModelParams {
    double u_phi = 0.01;        // boundary-mode velocity
    double m_phi = 100.0;       // boundary mass parameter
    double u_psi = 1.0;         // medium velocity
    double m_psi = 0.5;         // bare scalar mass
    double lambda_psi = 4.0;    // quartic coupling
    double mu = 2.0;            // effective chemical potential
    double e_charge = 1.0;
    double g_A = 1.0;
    double g_B = 1.0;
    double a_sep = 2.0;         // plate separation
    double v_rel = 0.04;        // relative velocity of plate A
    double gamma_phi = 0.0;     // boundary linewidth, 0 = ideal delta shell
    InverseTemperature beta = InverseTemperature::zero_temperature();
    /// Explicit amplitude-mode gap; when absent m_H^2 = lambda_psi rho0^2 / 2.
    std::optional<double> m_H;

    /// Throws ParamError when a positivity invariant is violated.
    void validate() const;
};

struct DerivedParams {
    double rho0 = 0.0;
    double lambda_A = 0.0;
    double lambda_B = 0.0;
    double m_A = 0.0;    // screening mass
    double c_mix = 0.0;  // h-A0 mixing constant
    double m_H = 0.0;    // amplitude-mode gap
};

/// Squared condensate amplitude (4/lambda)(mu^2/u^2 - m^2 u^2); may be <= 0.
double condensate_rho0_squared(const ModelParams& p);

/// Throws PhaseError when rho0^2 <= 0 (symmetric phase).
DerivedParams derive_condensate(const ModelParams& p);

enum class RegimeWarningKind { velocity, quasi_static };

struct RegimeWarning {
    RegimeWarningKind kind;
    std::string message;
};

inline constexpr double kVelocityWarnThreshold = 0.3;
inline constexpr double kQuasiStaticWarnFraction = 0.5;

/// Checks the v << 1, omega << m_A window. Never throws.
std::vector<RegimeWarning> validate_regime(const ModelParams& p, const DerivedParams& d);

/// Variant taking the characteristic shell frequency explicitly.
std::vector<RegimeWarning> validate_regime(const ModelParams& p, const DerivedParams& d,
                                           std::optional<double> omega_star);

}  // namespace decoshell
