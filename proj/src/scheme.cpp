#include "schro/scheme.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "schro/errors.hpp"
#include "kernels_impl.hpp"

namespace schro {
namespace {

// Undivided 8th difference (second difference applied four times).
constexpr std::array<double, 9> kKreissOliger8 = {1.0,  -8.0, 28.0, -56.0, 70.0,
                                                  -56.0, 28.0, -8.0, 1.0};

void require_interface(const SchemeConfig& cfg) {
    if (cfg.op == nullptr)
        throw UsageError("scheme: interface rhs requires an SBP operator");
}

void require_periodic(const SchemeConfig& cfg) {
    if (cfg.periodic == nullptr)
        throw UsageError("scheme: periodic rhs requires a periodic stencil");
}

/// Shared interface rhs body. `include_sat` drops the two derivative
/// corrections for the flux diagnostic; `include_penalty` isolates the
/// explicit part for the IMEX split.
template <class R>
void interface_rhs_impl(const SchemeConfig& cfg, const std::complex<R>* u,
                        double t, std::complex<R>* out, bool include_sat,
                        bool include_penalty) {
    const SbpOperator& op = *cfg.op;
    const int n = op.grid.n_intervals;
    const R dx = static_cast<R>(op.grid.dx);
    const std::complex<R> mi(0, -1);  // -i

    thread_local std::vector<std::complex<R>> d, dd;
    d.resize(static_cast<size_t>(n) + 1);
    dd.resize(static_cast<size_t>(n) + 1);
    detail::kernel_apply_d<R>(op, u, d.data());
    detail::kernel_apply_d<R>(op, d.data(), dd.data());

    for (int j = 0; j <= n; ++j) out[j] = mi * dd[j];

    if (cfg.potential) {
        for (int j = 0; j <= n; ++j) {
            const R v = static_cast<R>(cfg.potential(op.grid.x(j), t));
            out[j] += mi * v * u[j];
        }
    }

    if (include_sat) {
        const R s0 = static_cast<R>(op.sigma(0));
        const R sn = static_cast<R>(op.sigma(n));
        out[0] += mi * d[0] / (dx * s0);
        out[n] -= mi * d[n] / (dx * sn);
    }

    if (include_penalty) {
        const std::complex<R> l(static_cast<R>(cfg.interaction_factor.real()),
                                static_cast<R>(cfg.interaction_factor.imag()));
        const std::complex<R> jump = mi * l * (u[0] - u[n]);
        out[0] += jump;
        out[n] -= jump;
    }

    if (cfg.dissipation_epsilon > 0.0) {
        const R scale = -static_cast<R>(cfg.dissipation_epsilon) / dx;
        for (int j = 4; j <= n - 4; ++j) {
            std::complex<R> acc(0, 0);
            for (int m = -4; m <= 4; ++m)
                acc += static_cast<R>(kKreissOliger8[static_cast<size_t>(m + 4)]) *
                       u[j + m];
            out[j] += scale * acc;
        }
    }
}

}  // namespace

double resolve_interaction_factor(LScaling scaling, double coeff,
                                  const SbpOperator& op) {
    const double dx = op.grid.dx;
    switch (scaling) {
        case LScaling::explicit_bound:
            return 1.0 / (op.sigma(0) * dx * dx);
        case LScaling::dx_pow2:
            return coeff / (dx * dx);
        case LScaling::dx_pow3:
            return coeff / (dx * dx * dx);
    }
    throw ConfigError("scheme: unknown L scaling rule");
}

WaveFunction rhs_interface(const SchemeConfig& cfg, const WaveFunction& u,
                           double t) {
    require_interface(cfg);
    WaveFunction out{std::vector<std::complex<double>>(u.values.size()),
                     Representation::interface};
    interface_rhs_impl<double>(cfg, u.values.data(), t, out.values.data(), true,
                               true);
    return out;
}

WaveFunction rhs_periodic(const SchemeConfig& cfg, const WaveFunction& u,
                          double t) {
    require_periodic(cfg);
    const PeriodicStencil& st = *cfg.periodic;
    const int n = st.grid.n_intervals;
    WaveFunction out{std::vector<std::complex<double>>(u.values.size()),
                     Representation::periodic};
    thread_local std::vector<std::complex<double>> d, dd;
    d.resize(static_cast<size_t>(n));
    dd.resize(static_cast<size_t>(n));
    detail::kernel_apply_periodic_d<double>(st, u.values.data(), d.data());
    detail::kernel_apply_periodic_d<double>(st, d.data(), dd.data());
    const std::complex<double> mi(0, -1);
    for (int j = 0; j < n; ++j) out.values[static_cast<size_t>(j)] = mi * dd[static_cast<size_t>(j)];
    if (cfg.potential) {
        for (int j = 0; j < n; ++j) {
            const double v = cfg.potential(st.grid.x(j), t);
            out.values[static_cast<size_t>(j)] += mi * v * u.values[static_cast<size_t>(j)];
        }
    }
    return out;
}

void rhs_interface_split(const SchemeConfig& cfg, const WaveFunction& u,
                         double t, WaveFunction& expl, WaveFunction& stiff) {
    require_interface(cfg);
    const int n = cfg.op->grid.n_intervals;
    expl.rep = Representation::interface;
    stiff.rep = Representation::interface;
    expl.values.assign(static_cast<size_t>(n) + 1, {0.0, 0.0});
    stiff.values.assign(static_cast<size_t>(n) + 1, {0.0, 0.0});
    interface_rhs_impl<double>(cfg, u.values.data(), t, expl.values.data(), true,
                               false);
    const std::complex<double> jump =
        std::complex<double>(0, -1) * cfg.interaction_factor *
        (u.values[0] - u.values[static_cast<size_t>(n)]);
    stiff.values[0] = jump;
    stiff.values[static_cast<size_t>(n)] = -jump;
}

WaveFunction rhs_interface_no_sat(const SchemeConfig& cfg,
                                  const WaveFunction& u, double t) {
    require_interface(cfg);
    WaveFunction out{std::vector<std::complex<double>>(u.values.size()),
                     Representation::interface};
    interface_rhs_impl<double>(cfg, u.values.data(), t, out.values.data(), false,
                               true);
    return out;
}

WaveFunction ko_dissipation(const SbpOperator& op, double epsilon,
                            const WaveFunction& u) {
    const int n = op.grid.n_intervals;
    WaveFunction out{std::vector<std::complex<double>>(static_cast<size_t>(n) + 1,
                                                       {0.0, 0.0}),
                     Representation::interface};
    const double scale = -epsilon / op.grid.dx;
    for (int j = 4; j <= n - 4; ++j) {
        std::complex<double> acc(0, 0);
        for (int m = -4; m <= 4; ++m)
            acc += kKreissOliger8[static_cast<size_t>(m + 4)] *
                   u.values[static_cast<size_t>(j + m)];
        out.values[static_cast<size_t>(j)] = scale * acc;
    }
    return out;
}

WaveFunction ko_dissipation(const PeriodicStencil& st, double epsilon,
                            const WaveFunction& u) {
    const int n = st.grid.n_intervals;
    WaveFunction out{std::vector<std::complex<double>>(static_cast<size_t>(n),
                                                       {0.0, 0.0}),
                     Representation::periodic};
    const double scale = -epsilon / st.grid.dx;
    for (int j = 0; j < n; ++j) {
        std::complex<double> acc(0, 0);
        for (int m = -4; m <= 4; ++m) {
            int idx = j + m;
            if (idx < 0) idx += n;
            if (idx >= n) idx -= n;
            acc += kKreissOliger8[static_cast<size_t>(m + 4)] *
                   u.values[static_cast<size_t>(idx)];
        }
        out.values[static_cast<size_t>(j)] = scale * acc;
    }
    return out;
}

double interface_energy_rate(const SchemeConfig& cfg, const WaveFunction& u) {
    require_interface(cfg);
    const size_t n = u.values.size();
    std::vector<std::complex<long double>> ul(n), rl(n);
    for (size_t j = 0; j < n; ++j)
        ul[j] = {u.values[j].real(), u.values[j].imag()};
    interface_rhs_impl<long double>(cfg, ul.data(), 0.0, rl.data(), true, true);
    const std::complex<long double> inner =
        detail::kernel_weighted_inner<long double>(*cfg.op, ul.data(), rl.data());
    return static_cast<double>(std::abs(inner.real()));
}

double interface_hermiticity_defect(const SchemeConfig& cfg,
                                    const WaveFunction& u,
                                    const WaveFunction& v) {
    require_interface(cfg);
    const size_t n = u.values.size();
    std::vector<std::complex<long double>> ul(n), vl(n), ru(n), rv(n);
    for (size_t j = 0; j < n; ++j) {
        ul[j] = {u.values[j].real(), u.values[j].imag()};
        vl[j] = {v.values[j].real(), v.values[j].imag()};
    }
    interface_rhs_impl<long double>(cfg, ul.data(), 0.0, ru.data(), true, true);
    interface_rhs_impl<long double>(cfg, vl.data(), 0.0, rv.data(), true, true);
    const std::complex<long double> a =
        detail::kernel_weighted_inner<long double>(*cfg.op, vl.data(), ru.data());
    const std::complex<long double> b =
        detail::kernel_weighted_inner<long double>(*cfg.op, rv.data(), ul.data());
    return static_cast<double>(std::abs(a + b));
}

}  // namespace schro
