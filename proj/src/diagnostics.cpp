#include "schro/diagnostics.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "schro/errors.hpp"
#include "schro/sbp.hpp"
#include "text_impl.hpp"

namespace schro {
namespace {

using detail::format_double;

double trapezoid_weight(const WaveFunction& u, size_t j) {
    if (u.rep == Representation::interface &&
        (j == 0 || j + 1 == u.values.size()))
        return 0.5;
    return 1.0;
}

}  // namespace

void TimeSeries::append(double t, double v) {
    if (!times.empty() && t <= times.back())
        throw UsageError("time series: sample times must strictly increase");
    times.push_back(t);
    values.push_back(v);
}

void write_csv(const TimeSeries& series, std::ostream& out) {
    out << "time,value\n";
    for (size_t i = 0; i < series.times.size(); ++i)
        out << format_double(series.times[i]) << ','
            << format_double(series.values[i]) << '\n';
}

void write_csv(const TimeSeries& series, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw UsageError("time series: cannot open " + path);
    write_csv(series, out);
}

double trapezoid_norm(const WaveFunction& u, const GridCircle& grid) {
    long double acc = 0.0L;
    for (size_t j = 0; j < u.values.size(); ++j)
        acc += static_cast<long double>(trapezoid_weight(u, j)) *
               std::norm(std::complex<long double>(u.values[j].real(),
                                                   u.values[j].imag()));
    return static_cast<double>(
        std::sqrt(static_cast<long double>(grid.dx) * acc));
}

double sigma_norm(const SbpOperator& op, const WaveFunction& u) {
    const std::complex<double> inner = weighted_inner(op, u, u);
    return std::sqrt(inner.real());
}

WaveFunction error_field(const WaveFunction& u, const GridCircle& grid,
                         const WaveFunction& ref, const GridCircle& ref_grid) {
    if (grid.length != ref_grid.length)
        throw UsageError("error field: grids live on different circles");
    if (ref_grid.n_intervals % grid.n_intervals != 0)
        throw UsageError("error field: grids are not nested");
    const int m = ref_grid.n_intervals / grid.n_intervals;
    const int n_ref = ref_grid.n_intervals;

    WaveFunction e{u.values, u.rep};
    for (size_t j = 0; j < u.values.size(); ++j) {
        int idx = static_cast<int>(j) * m;
        if (ref.rep == Representation::periodic && idx >= n_ref) idx -= n_ref;
        e.values[j] -= ref.values[static_cast<size_t>(idx)];
    }
    return e;
}

double error_vs_reference(const WaveFunction& u, const GridCircle& grid,
                          const WaveFunction& ref, const GridCircle& ref_grid) {
    return trapezoid_norm(error_field(u, grid, ref, ref_grid), grid);
}

TimeSeries convergence_index(const TimeSeries& e_coarse,
                             const TimeSeries& e_fine) {
    if (e_coarse.size() != e_fine.size())
        throw UsageError("convergence index: sample counts differ");
    TimeSeries q;
    for (size_t i = 0; i < e_coarse.size(); ++i) {
        const double t = e_coarse.times[i];
        if (std::abs(t - e_fine.times[i]) > 1e-12 * std::max(1.0, std::abs(t)))
            throw UsageError("convergence index: sample times differ");
        const double ec = e_coarse.values[i];
        const double ef = e_fine.values[i];
        if (ec < 1e-13 || ef < 1e-13) continue;  // below noise floor: absent
        q.append(t, std::log2(ec / ef));
    }
    return q;
}

double reflected_fraction(const WaveFunction& u, const GridCircle& grid,
                          double window_lo, double window_hi) {
    if (!(window_lo < window_hi) || window_lo < 0.0 ||
        window_hi > grid.length)
        throw UsageError("reflected fraction: window must be a nonempty "
                         "subinterval of the circle");
    long double total = 0.0L, inside = 0.0L;
    for (size_t j = 0; j < u.values.size(); ++j) {
        const long double w = trapezoid_weight(u, j);
        const long double m =
            w * std::norm(std::complex<long double>(u.values[j].real(),
                                                    u.values[j].imag()));
        total += m;
        const double x = grid.x(static_cast<int>(j));
        if (x >= window_lo && x <= window_hi) inside += m;
    }
    if (total == 0.0L) return 0.0;
    return static_cast<double>(inside / total);
}

}  // namespace schro
