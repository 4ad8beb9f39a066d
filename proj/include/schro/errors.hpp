#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace schro {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid configuration (bad grid size, unknown preset, bad flag value).
/// CLI exit code 2.
struct ConfigError : Error {
    using Error::Error;
};

/// API misuse: representation or grid mismatch between arguments.
/// CLI exit code 2.
struct UsageError : Error {
    using Error::Error;
};

/// Malformed input file. Carries the 1-based line number when known.
/// CLI exit code 2.
struct ParseError : Error {
    ParseError(const std::string& what, int line_arg)
        : Error(what + " (line " + std::to_string(line_arg) + ")"), line(line_arg) {}
    explicit ParseError(const std::string& what) : Error(what), line(0) {}
    int line;
};

/// The evolution produced a non-finite value. Carries the step context.
/// CLI exit code 3.
struct InstabilityError : Error {
    InstabilityError(int step_arg, double time_arg, double dt_arg,
                     std::complex<double> l_arg)
        : Error("non-finite state at step " + std::to_string(step_arg) +
                ", t = " + std::to_string(time_arg) +
                ", dt = " + std::to_string(dt_arg) +
                ", L = " + std::to_string(l_arg.real()) +
                (l_arg.imag() == 0.0 ? "" : " + " + std::to_string(l_arg.imag()) + "i")),
          step(step_arg), time(time_arg), dt(dt_arg), interaction_factor(l_arg) {}
    int step;
    double time;
    double dt;
    std::complex<double> interaction_factor;
};

}  // namespace schro
