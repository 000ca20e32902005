#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "decoshell/params.hpp"

namespace decoshell::quad {

struct Options {
    double rel_tol = 1e-6;
    double abs_tol = 0.0;
    std::size_t max_evals = 1'000'000;
    ExecPolicy exec = ExecPolicy::serial;
};

enum class Status { converged, max_evals, roundoff };

struct Result {
    double value = 0.0;
    double abs_err = 0.0;
    std::size_t n_evals = 0;
    Status status = Status::converged;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 21-point Gauss-Kronrod over [points.front(), points.back()],
/// with the interior points as initial breakpoints. `points` must be sorted.
///
/// With ExecPolicy::parallel the nodes of each refinement step are evaluated
/// by an OpenMP team; the subdivision sequence and the final ordered sum are
/// identical to the serial run, so both policies return bit-identical results.
Result gauss_kronrod(const Integrand& f, std::span<const double> points, const Options& opt);

/// Single 21-point Kronrod estimate on [a, b] (reference rule used by tests).
double kronrod21(const Integrand& f, double a, double b, double* abs_err = nullptr);

}  // namespace decoshell::quad
