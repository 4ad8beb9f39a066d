#include "schro/grid.hpp"

#include <cmath>

namespace schro {

std::complex<double> InitialData::at(double x) const {
    const double d = x - envelope_center;
    const double envelope = std::exp(-d * d / envelope_denominator);
    const std::complex<double> phase =
        std::exp(std::complex<double>(0.0, wave_number * x));
    return amplitude * envelope * phase;
}

GridCircle make_grid(double length, int n) {
    if (!(length > 0.0)) {
        throw ConfigError("grid length must be positive, got " + std::to_string(length));
    }
    if (n < 8) {
        throw ConfigError("grid needs at least 8 intervals, got " + std::to_string(n));
    }
    GridCircle g;
    g.length = length;
    g.n_intervals = n;
    g.dx = length / n;
    return g;
}

WaveFunction sample_initial_data(const InitialData& data, const GridCircle& grid,
                                 Representation rep) {
    WaveFunction u;
    u.rep = rep;
    const int m = grid.n_values(rep);
    u.values.resize(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        u[j] = data.at(grid.x(j));
    }
    return u;
}

WaveFunction restrict_to_coarse(const WaveFunction& fine, const GridCircle& fine_grid,
                                const GridCircle& coarse_grid) {
    if (fine.size() != fine_grid.n_values(fine.rep)) {
        throw UsageError("fine state length does not match its grid");
    }
    if (fine_grid.length != coarse_grid.length) {
        throw UsageError("restriction requires equal circle lengths");
    }
    const int nf = fine_grid.n_intervals;
    const int nc = coarse_grid.n_intervals;
    if (nc <= 0 || nf % nc != 0) {
        throw UsageError("fine resolution " + std::to_string(nf) +
                         " is not a multiple of coarse resolution " + std::to_string(nc));
    }
    const int m = nf / nc;
    WaveFunction out;
    out.rep = fine.rep;
    const int nout = coarse_grid.n_values(out.rep);
    out.values.resize(static_cast<size_t>(nout));
    // m*j stays in range for both representations: interface states carry the
    // duplicated endpoint (j = nc maps to src = nf), periodic ones stop at nc-1.
    for (int j = 0; j < nout; ++j) {
        out[j] = fine[m * j];
    }
    return out;
}

}  // namespace schro
