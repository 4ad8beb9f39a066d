#include "schro/integrate.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "schro/errors.hpp"

namespace schro {
namespace {

bool all_finite(const WaveFunction& u) {
    for (const auto& z : u.values)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

void axpy(WaveFunction& y, double a, const WaveFunction& x) {
    const size_t n = y.values.size();
    for (size_t j = 0; j < n; ++j) y.values[j] += a * x.values[j];
}

}  // namespace

ImexTableau imex_ssp3_433() {
    // Four-stage, third-order, L-stable pair; alpha is the root of
    // 6a^3 - 18a^2 + 9a - 1 placing the implicit scheme in the stable branch.
    const double alpha = 0.24169426078821;
    const double beta = 0.06042356519705;
    const double eta = 0.12915286960590;
    ImexTableau t{};
    t.a_explicit[2][1] = 1.0;
    t.a_explicit[3][1] = 0.25;
    t.a_explicit[3][2] = 0.25;
    t.a_implicit[0][0] = alpha;
    t.a_implicit[1][0] = -alpha;
    t.a_implicit[1][1] = alpha;
    t.a_implicit[2][1] = 1.0 - alpha;
    t.a_implicit[2][2] = alpha;
    t.a_implicit[3][0] = beta;
    t.a_implicit[3][1] = eta;
    t.a_implicit[3][2] = 0.5 - alpha - beta - eta;
    t.a_implicit[3][3] = alpha;
    t.b[0] = 0.0;
    t.b[1] = 1.0 / 6.0;
    t.b[2] = 1.0 / 6.0;
    t.b[3] = 2.0 / 3.0;
    t.c_explicit[0] = 0.0;
    t.c_explicit[1] = 0.0;
    t.c_explicit[2] = 1.0;
    t.c_explicit[3] = 0.5;
    t.c_implicit[0] = alpha;
    t.c_implicit[1] = 0.0;
    t.c_implicit[2] = 1.0;
    t.c_implicit[3] = 0.5;
    return t;
}

WaveFunction rk4_step(const RhsFn& rhs, const WaveFunction& u, double t,
                      double dt, std::complex<double> l_context) {
    WaveFunction k1{u.values, u.rep}, k2 = k1, k3 = k1, k4 = k1;
    WaveFunction stage{u.values, u.rep};

    rhs(u, t, k1);
    stage.values = u.values;
    axpy(stage, 0.5 * dt, k1);
    rhs(stage, t + 0.5 * dt, k2);
    stage.values = u.values;
    axpy(stage, 0.5 * dt, k2);
    rhs(stage, t + 0.5 * dt, k3);
    stage.values = u.values;
    axpy(stage, dt, k3);
    rhs(stage, t + dt, k4);

    WaveFunction out{u.values, u.rep};
    axpy(out, dt / 6.0, k1);
    axpy(out, dt / 3.0, k2);
    axpy(out, dt / 3.0, k3);
    axpy(out, dt / 6.0, k4);
    if (!all_finite(out))
        throw InstabilityError(-1, t, dt, l_context);
    return out;
}

std::pair<std::complex<double>, std::complex<double>> penalty_solve(
    std::complex<double> l, double coeff, std::complex<double> u0,
    std::complex<double> un) {
    const std::complex<double> sum = u0 + un;
    const std::complex<double> diff =
        (u0 - un) / (1.0 + 2.0 * std::complex<double>(0, 1) * coeff * l);
    return {0.5 * (sum + diff), 0.5 * (sum - diff)};
}

WaveFunction imex_step(const RhsFn& explicit_rhs, std::complex<double> l,
                       const ImexTableau& tab, const WaveFunction& u, double t,
                       double dt) {
    const size_t last = u.values.size() - 1;
    const std::complex<double> mi(0, -1);

    std::array<WaveFunction, ImexTableau::stages> k_explicit;
    // The stiff penalty is nonzero only at the two endpoints; store the
    // endpoint-0 value (endpoint-N value is its negation).
    std::array<std::complex<double>, ImexTableau::stages> k_stiff{};

    WaveFunction stage{u.values, u.rep};
    for (int i = 0; i < ImexTableau::stages; ++i) {
        stage.values = u.values;
        for (int j = 0; j < i; ++j) {
            if (tab.a_explicit[i][j] != 0.0)
                axpy(stage, dt * tab.a_explicit[i][j], k_explicit[static_cast<size_t>(j)]);
            if (tab.a_implicit[i][j] != 0.0) {
                const std::complex<double> w = dt * tab.a_implicit[i][j] * k_stiff[static_cast<size_t>(j)];
                stage.values[0] += w;
                stage.values[last] -= w;
            }
        }
        const auto [v0, vn] = penalty_solve(l, dt * tab.a_implicit[i][i],
                                            stage.values[0], stage.values[last]);
        stage.values[0] = v0;
        stage.values[last] = vn;
        k_stiff[static_cast<size_t>(i)] = mi * l * (v0 - vn);
        // Skip stages whose explicit slope never enters the update.
        bool needed = tab.b[i] != 0.0;
        for (int j = i + 1; j < ImexTableau::stages; ++j)
            needed = needed || tab.a_explicit[j][i] != 0.0;
        if (needed) {
            k_explicit[static_cast<size_t>(i)] = WaveFunction{
                std::vector<std::complex<double>>(u.values.size()), u.rep};
            explicit_rhs(stage, t + tab.c_explicit[i] * dt,
                         k_explicit[static_cast<size_t>(i)]);
        }
    }

    WaveFunction out{u.values, u.rep};
    for (int i = 0; i < ImexTableau::stages; ++i) {
        if (tab.b[i] == 0.0) continue;
        axpy(out, dt * tab.b[i], k_explicit[static_cast<size_t>(i)]);
        const std::complex<double> w = dt * tab.b[i] * k_stiff[static_cast<size_t>(i)];
        out.values[0] += w;
        out.values[last] -= w;
    }
    if (!all_finite(out))
        throw InstabilityError(-1, t, dt, l);
    return out;
}

WaveFunction evolve(const SchemeConfig& scheme, Integrator integrator,
                    WaveFunction state, double t_final,
                    const StepPolicy& policy, int samples,
                    const SampleObserver& observer) {
    if (t_final <= 0.0) throw ConfigError("evolve: t_final must be positive");
    if (samples < 1) throw ConfigError("evolve: samples must be >= 1");
    const GridCircle& grid =
        scheme.op != nullptr ? scheme.op->grid : scheme.periodic->grid;
    const double dt0 = policy.dt(grid);
    if (dt0 <= 0.0) throw ConfigError("evolve: cfl_factor must be positive");

    // Never force steps below the nominal dt just to hit sample times.
    const int nominal =
        std::max(1, static_cast<int>(std::ceil(t_final / dt0 - 1e-12)));
    const int n_windows = std::min(samples, nominal);

    RhsFn rhs;
    const ImexTableau tableau = imex_ssp3_433();
    std::complex<double> l = scheme.interaction_factor;
    if (integrator == Integrator::rk4) {
        if (scheme.op != nullptr)
            rhs = [&scheme](const WaveFunction& u, double t, WaveFunction& out) {
                out = rhs_interface(scheme, u, t);
            };
        else
            rhs = [&scheme](const WaveFunction& u, double t, WaveFunction& out) {
                out = rhs_periodic(scheme, u, t);
            };
    } else {
        if (scheme.op != nullptr) {
            // Penalty handled implicitly; explicit part carries the rest.
            SchemeConfig expl_cfg = scheme;
            expl_cfg.interaction_factor = {0.0, 0.0};
            rhs = [expl_cfg](const WaveFunction& u, double t, WaveFunction& out) {
                out = rhs_interface(expl_cfg, u, t);
            };
        } else {
            l = {0.0, 0.0};
            rhs = [&scheme](const WaveFunction& u, double t, WaveFunction& out) {
                out = rhs_periodic(scheme, u, t);
            };
        }
    }

    if (observer) observer(0, 0.0, state);
    long global_step = 0;
    for (int s = 1; s <= n_windows; ++s) {
        const double t_start = t_final * (s - 1) / n_windows;
        const double t_target = t_final * s / n_windows;
        const int m = std::max(
            1, static_cast<int>(std::ceil((t_target - t_start) / dt0 - 1e-12)));
        for (int k = 0; k < m; ++k) {
            const double t = t_start + k * dt0;
            const double dt = k < m - 1 ? dt0 : t_target - (t_start + (m - 1) * dt0);
            try {
                state = integrator == Integrator::rk4
                            ? rk4_step(rhs, state, t, dt, l)
                            : imex_step(rhs, l, tableau, state, t, dt);
            } catch (const InstabilityError& e) {
                throw InstabilityError(global_step, e.time, e.dt,
                                       e.interaction_factor);
            }
            ++global_step;
        }
        if (observer) observer(s, t_target, state);
    }
    return state;
}

}  // namespace schro
