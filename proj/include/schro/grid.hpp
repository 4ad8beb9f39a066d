#pragma once

#include <complex>
#include <numbers>
#include <vector>

#include "schro/errors.hpp"

namespace schro {

/// How a state is stored on the circle.
///  - interface: N+1 values, j = 0..N; x_0 and x_N are the same circle point,
///    both evolved, coupled through the interface penalty.
///  - periodic: N values, j = 0..N-1, wraparound indexing.
enum class Representation { interface, periodic };

/// Uniform grid on a circle of circumference `length`, points x_j = j*dx.
struct GridCircle {
    double length = 2.0;
    int n_intervals = 0;  ///< N
    double dx = 0.0;      ///< length / N

    double x(int j) const { return dx * j; }

    /// Number of stored values for a representation.
    int n_values(Representation rep) const {
        return rep == Representation::interface ? n_intervals + 1 : n_intervals;
    }
};

/// Complex-valued discrete state on grid points.
struct WaveFunction {
    std::vector<std::complex<double>> values;
    Representation rep = Representation::interface;

    int size() const { return static_cast<int>(values.size()); }
    std::complex<double>& operator[](int j) { return values[static_cast<size_t>(j)]; }
    const std::complex<double>& operator[](int j) const {
        return values[static_cast<size_t>(j)];
    }
};

/// Gaussian-envelope plane wave:
///   amplitude * exp(-(x-center)^2 / denominator) * exp(i * wave_number * x).
struct InitialData {
    double envelope_center = 1.0;
    double envelope_denominator = 20.0;
    double wave_number = 100.0 * std::numbers::pi;
    std::complex<double> amplitude = 1.0;

    std::complex<double> at(double x) const;
};

/// Builds a grid. Throws ConfigError for non-positive length or n < 8.
GridCircle make_grid(double length, int n);

/// Samples the initial data at every grid point of the representation.
/// For the interface representation, j=0 is sampled at x=0 and j=N at
/// x=length (they differ only through the envelope).
WaveFunction sample_initial_data(const InitialData& data, const GridCircle& grid,
                                 Representation rep);

/// Injects fine-grid values at coincident points: coarse[j] = fine[m*j] where
/// m = fine.N / coarse.N. No interpolation. Throws UsageError if the grids do
/// not nest or lengths differ.
WaveFunction restrict_to_coarse(const WaveFunction& fine, const GridCircle& fine_grid,
                                const GridCircle& coarse_grid);

}  // namespace schro
