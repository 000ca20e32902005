#pragma once

#include "decoshell/rates.hpp"

namespace decoshell {

/// Stationary windowed history of the two boundaries.
struct History {
    double delta_A = 1.0;
    double delta_B = 1.0;
    double duration_T = 1.0;
    double area = 1.0;  // effective transverse area

    /// Throws ParamError when duration_T or area is negative.
    void validate() const;
};

/// Cross decoherence exponent Delta_A Delta_B T area R. Requires a resonant rate.
double damping(const History& h, const RateResult& r);

/// exp(-damping); throws NegativeDampingError for a negative exponent.
double coherence(const History& h, const RateResult& r);

/// Diagonal exponent Delta_i^2 T area R_local for one boundary. Extension
/// beyond the cross channel; r must come from rate_local.
double local_damping(const History& h, const RateResult& r, Boundary which);

}  // namespace decoshell
