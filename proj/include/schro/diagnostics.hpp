#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "schro/grid.hpp"
#include "schro/sbp.hpp"

namespace schro {

/// Scalar diagnostic sampled at strictly increasing times.
struct TimeSeries {
    std::vector<double> times;
    std::vector<double> values;

    void append(double t, double v);
    size_t size() const { return times.size(); }
};

/// CSV with header "time,value", shortest round-trip double formatting.
void write_csv(const TimeSeries& series, std::ostream& out);
void write_csv(const TimeSeries& series, const std::string& path);

/// sqrt(dx * sum w_j |u_j|^2) with trapezoid weights: both representations
/// integrate over the full circle (endpoint values get weight 1/2 on the
/// interface representation; the wraparound sum is already the trapezoid
/// rule on the periodic one). Operator-independent, so curves from different
/// operators are directly comparable.
double trapezoid_norm(const WaveFunction& u, const GridCircle& grid);

/// sqrt of the sigma-weighted inner product of u with itself: the quantity
/// the interface scheme conserves semi-discretely.
double sigma_norm(const SbpOperator& op, const WaveFunction& u);

/// u minus the reference restricted to u's grid. The reference must live on
/// the same circle with spacing an integer divisor of u's; representations
/// may differ (the identified endpoint value is reused when restricting a
/// periodic reference to an interface grid).
WaveFunction error_field(const WaveFunction& u, const GridCircle& grid,
                         const WaveFunction& ref, const GridCircle& ref_grid);

/// trapezoid_norm of error_field(u, ref).
double error_vs_reference(const WaveFunction& u, const GridCircle& grid,
                          const WaveFunction& ref, const GridCircle& ref_grid);

/// q(t) = log2(e_coarse(t) / e_fine(t)) at matching sample times; samples
/// where either error is below 1e-13 are omitted from the result.
TimeSeries convergence_index(const TimeSeries& e_coarse,
                             const TimeSeries& e_fine);

/// Squared trapezoid norm over window_lo <= x_j <= window_hi divided by the
/// squared total norm.
double reflected_fraction(const WaveFunction& u, const GridCircle& grid,
                          double window_lo, double window_hi);

}  // namespace schro
