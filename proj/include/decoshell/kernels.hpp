#pragma once

#include "decoshell/params.hpp"
#include "decoshell/propagator.hpp"

namespace decoshell {

/// 2x2 boundary matrix; A sits at z = a, B at z = 0.
struct KernelMatrix2 {
    cplx aa, ab, ba, bb;

    cplx det() const { return aa * bb - ab * ba; }
    /// Smallest eigenvalue, valid for Hermitian matrices.
    double min_eigenvalue_hermitian() const;
};

enum class BoundaryPair { aa, ab, ba, bb };

/// Lambda_i Lambda_j G_h^R at the boundaries (reciprocal: ab == ba).
KernelMatrix2 retarded_matrix(const DerivedParams& d, const ModelParams& p, double omega, MomentumPoint k,
                              const Numerics& num = {});

/// Spectral weight of the dressed mode from the symmetric eps-discontinuity
/// across the real axis, normalized so that sgn(omega) rho_h >= 0 on a plate.
/// Odd in omega.
double spectral_rho_h(const DerivedParams& d, const ModelParams& p, double omega, MomentumPoint k,
                      BoundaryPair at, const Numerics& num = {});

/// Symmetrized correlator (1/2) coth(beta omega / 2) rho_h; zero-temperature
/// form (1/2) sgn(omega) rho_h. Even in omega. Throws ZeroFrequencyError at
/// omega = 0 and zero temperature.
double hadamard(const DerivedParams& d, const ModelParams& p, double omega, MomentumPoint k, BoundaryPair at,
                const Numerics& num = {});

/// Lambda_i Lambda_j G_h^H at the boundaries. Hermitian and positive semidefinite.
KernelMatrix2 noise_matrix(const DerivedParams& d, const ModelParams& p, double omega, MomentumPoint k,
                           const Numerics& num = {});

}  // namespace decoshell
