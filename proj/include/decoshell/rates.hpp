#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "decoshell/params.hpp"
#include "decoshell/propagator.hpp"
#include "decoshell/quadrature.hpp"
#include "decoshell/resonance.hpp"

namespace decoshell {

enum class RateMode { resonant, regularized, symmetric, im_gamma, local };

std::string to_string(RateMode m);

struct RateResult {
    double value = 0.0;      // rate density, model units
    double abs_err = 0.0;
    std::size_t n_evals = 0;
    RateMode mode = RateMode::resonant;
    /// Shell point at ky = 0 when a shell exists.
    std::optional<ShellPoint> shell;
    /// True when the symmetric-phase kernel is the single-particle stand-in
    /// rather than a computed composite-density response.
    bool stand_in_kernel = false;
    quad::Status status = quad::Status::converged;
};

/// Shell-reduced cross channel
///   (lambda_A^2 lambda_B^2 u_phi^2 / 8 pi v) * int dky |G_h^R(w*, k*; a, 0)|^2 / (ky^2 + m_phi^2 u_phi^2).
/// Exactly 0 (with n_evals = 0) below or at threshold. Throws QuadratureError
/// when the target is not met within num.max_evals.
RateResult im_gamma_cross(const ModelParams& p, const DerivedParams& d, const Numerics& num = {});

/// Resonant decoherence-rate density. Unit history prefactor: identical to
/// im_gamma_cross, relabeled.
RateResult rate_resonant(const ModelParams& p, const DerivedParams& d, const Numerics& num = {});

enum class Boundary { A, B };

/// Diagonal analogue of rate_resonant: lambda_i^4 and the same-plate kernel on
/// the same shell. Not part of the cross-channel result; used for the local
/// damping exponent.
RateResult rate_local(const ModelParams& p, const DerivedParams& d, Boundary which, const Numerics& num = {});

/// Plug-in inter-plate kernel for the symmetric phase, evaluated on the shell.
using SymmetricKernel = std::function<double(double omega, MomentumPoint k)>;

/// Symmetric-phase variant with couplings g_A^2 g_B^2. Without a kernel the
/// bulk propagator g_bulk_symmetric(p, w*, k*, m_gap) is used and the result
/// is flagged stand_in_kernel. EvanescenceError propagates from the kernel.
RateResult im_gamma_symmetric(const ModelParams& p, double m_gap, const Numerics& num = {},
                              const SymmetricKernel& kernel = {});

/// Broadened overlap weight after the frequency integration,
///   W(v, k) = int dw/(2 pi) rho_A^(-)(w - v kx, k) rho_B^(+)(w, k),
/// evaluated numerically. Uses p.gamma_phi (> 0, else WidthError).
double overlap_weight(const ModelParams& p, double v, MomentumPoint k, const Numerics& num = {});

/// Same frequency integral with |G_h^R(w, k; a, 0)|^2 kept inside.
double overlap_weight_exact_kernel(const ModelParams& p, const DerivedParams& d, double v, MomentumPoint k,
                                   const Numerics& num = {});

/// Frequency at which the kernel is sampled in the factorized treatment: the
/// peak v kx / 2 of the product of the two Lorentzians.
double overlap_peak_frequency(double v, MomentumPoint k);

enum class KernelTreatment { factorized, exact };

/// Lorentzian-regularized rate
///   lambda_A^2 lambda_B^2 int d^2k/(2 pi)^2 W(v, k) |G_h^R(w, k; a, 0)|^2.
RateResult rate_regularized(const ModelParams& p, const DerivedParams& d, const Numerics& num = {},
                            KernelTreatment treatment = KernelTreatment::factorized);

/// Integrand of the regularized cross channel at one (omega, k), i.e. the
/// correlated-noise density
///   lambda_A^2 lambda_B^2 rho_A^(-)(w - v kx) rho_B^(+)(w) |G_h^R(w, k; a, 0)|^2 / (2 pi)^3.
/// Needs gamma_phi > 0.
double shell_noise_density(const ModelParams& p, const DerivedParams& d, double omega, MomentumPoint k,
                           const Numerics& num = {});

/// Smallest attenuation rate Re gamma among the dressed branches at the
/// ky = 0 shell point (the slowest-decaying point of the shell).
double min_decay_rate(const ModelParams& p, const DerivedParams& d, const Numerics& num = {});

}  // namespace decoshell
