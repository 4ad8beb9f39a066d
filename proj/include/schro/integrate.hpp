#pragma once

#include <complex>
#include <functional>
#include <utility>

#include "schro/grid.hpp"
#include "schro/scheme.hpp"

namespace schro {

/// Additive Runge-Kutta pair: explicit table for the smooth part, diagonally
/// implicit table for the stiff part, shared quadrature weights.
struct ImexTableau {
    static constexpr int stages = 4;
    double a_explicit[stages][stages];  ///< strictly lower triangular
    double a_implicit[stages][stages];  ///< lower triangular, constant diagonal
    double b[stages];
    double c_explicit[stages];
    double c_implicit[stages];
};

/// Third-order four-stage pair: explicit part is the SSP three-stage scheme
/// padded with an unused first stage; implicit part is L-stable and shares
/// the weights, so the combination is third order for both parts.
ImexTableau imex_ssp3_433();

/// Fixed step size tied to the parabolic grid scale: dt = cfl_factor * dx^2.
struct StepPolicy {
    double cfl_factor = 0.25;
    double dt(const GridCircle& grid) const {
        return cfl_factor * grid.dx * grid.dx;
    }
};

/// Right-hand side callback writing into a caller-provided state.
using RhsFn =
    std::function<void(const WaveFunction&, double, WaveFunction&)>;

/// Classical fourth-order Runge-Kutta step. Throws InstabilityError (with
/// `l_context` attached for diagnosis) if the result is not finite; any
/// NaN/overflow produced in a stage propagates to the result.
WaveFunction rk4_step(const RhsFn& rhs, const WaveFunction& u, double t,
                      double dt, std::complex<double> l_context = {0.0, 0.0});

/// Closed-form solve of the implicit stage equation restricted to the two
/// coupled endpoint values:
///   v0 = u0 - i coeff l (v0 - vn),  vn = un + i coeff l (v0 - vn).
/// Sum is preserved; the difference is divided by (1 + 2 i coeff l), so the
/// stiff mode is damped without amplification for Re(coeff l) >= 0.
std::pair<std::complex<double>, std::complex<double>> penalty_solve(
    std::complex<double> l, double coeff, std::complex<double> u0,
    std::complex<double> un);

/// One step of the additive scheme: `explicit_rhs` advanced by the explicit
/// table, the two-point penalty of strength `l` by the implicit table via
/// penalty_solve. With l = 0 this reduces exactly to the explicit scheme.
WaveFunction imex_step(const RhsFn& explicit_rhs, std::complex<double> l,
                       const ImexTableau& tableau, const WaveFunction& u,
                       double t, double dt);

enum class Integrator { rk4, imex };

/// Called at t = 0 and after each completed sample window.
using SampleObserver =
    std::function<void(int sample, double t, const WaveFunction&)>;

/// Advances `state` to t_final with fixed steps dt = policy.dt(grid), landing
/// exactly on the uniform sample times t_final * s / samples by shortening the
/// final step of each window (sample times are therefore identical across
/// resolutions). The sample count is capped by the nominal step count, so
/// t_final = dt yields exactly one step. Instability surfaces as
/// InstabilityError carrying the global step index, time, dt and L.
WaveFunction evolve(const SchemeConfig& scheme, Integrator integrator,
                    WaveFunction state, double t_final,
                    const StepPolicy& policy, int samples,
                    const SampleObserver& observer = {});

}  // namespace schro
