#include "decoshell/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "decoshell/errors.hpp"

namespace decoshell {

void History::validate() const {
    if (duration_T < 0.0) throw ParamError("history duration_T must be >= 0");
    if (area < 0.0) throw ParamError("history area must be >= 0");
}

double damping(const History& h, const RateResult& r) {
    if (r.mode != RateMode::resonant)
        throw ParamError("damping needs a resonant rate, got mode " + to_string(r.mode));
    h.validate();
    return h.delta_A * h.delta_B * h.duration_T * h.area * r.value;
}

double coherence(const History& h, const RateResult& r) {
    const double dmp = damping(h, r);
    if (dmp < 0.0) {
        std::ostringstream os;
        os << "negative decoherence exponent " << dmp << " (check rate and history signs)";
        throw NegativeDampingError(os.str());
    }
    return std::exp(-dmp);
}

double local_damping(const History& h, const RateResult& r, Boundary which) {
    if (r.mode != RateMode::local) throw ParamError("local_damping needs a rate from rate_local");
    h.validate();
    const double amp = which == Boundary::A ? h.delta_A : h.delta_B;
    return amp * amp * h.duration_T * h.area * r.value;
}

}  // namespace decoshell
