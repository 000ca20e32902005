#pragma once

#include <stdexcept>
#include <string>

namespace decoshell {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid model input (non-positive velocity, negative width, ...).
class ParamError : public Error {
public:
    using Error::Error;
};

/// The medium is not condensed (rho0^2 <= 0); use the symmetric-phase path.
class PhaseError : public Error {
public:
    using Error::Error;
};

/// A broadened spectral density was requested with zero linewidth.
class WidthError : public Error {
public:
    using Error::Error;
};

/// Symmetric-phase bulk propagator evaluated outside the evanescent regime.
class EvanescenceError : public Error {
public:
    using Error::Error;
};

/// No resonant shell: v <= 2 u_phi.
class ThresholdError : public Error {
public:
    using Error::Error;
};

/// sgn(omega) is undefined at omega = 0 at zero temperature.
class ZeroFrequencyError : public Error {
public:
    using Error::Error;
};

class QuadratureError : public Error {
public:
    using Error::Error;
};

class NegativeDampingError : public Error {
public:
    using Error::Error;
};

/// Peak search found the rate monotone (or flat) on the scanned range.
class NoPeakError : public Error {
public:
    using Error::Error;
};

/// Malformed configuration file, key or command-line override.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace decoshell
