#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "schro/errors.hpp"
#include "schro/grid.hpp"
#include "schro/integrate.hpp"
#include "schro/sbp.hpp"
#include "schro/scheme.hpp"

using namespace schro;
using cplx = std::complex<double>;

namespace {

/// rhs(u) = lambda * u elementwise.
RhsFn scalar_rhs(cplx lambda) {
    return [lambda](const WaveFunction& u, double, WaveFunction& out) {
        out.rep = u.rep;
        out.values.resize(u.values.size());
        for (int j = 0; j < u.size(); ++j) out.values[j] = lambda * u[j];
    };
}

WaveFunction two_point_state(cplx a, cplx b) {
    WaveFunction u;
    u.rep = Representation::interface;
    u.values = {a, b};
    return u;
}

/// exp(t M) for M = [[a, b], [c, d]], via the closed form
/// e^{mu t} [cosh(s t) I + sinh(s t)/s (M - mu I)] with mu = tr/2,
/// s^2 = (a-d)^2/4 + b c.
std::array<cplx, 4> expm2(cplx a, cplx b, cplx c, cplx d, double t) {
    const cplx mu = 0.5 * (a + d);
    const cplx s = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
    cplx ch, shs;
    if (std::abs(s) * t < 1e-8) {
        ch = 1.0 + 0.5 * s * s * t * t;
        shs = t * (1.0 + s * s * t * t / 6.0);
    } else {
        ch = std::cosh(s * t);
        shs = std::sinh(s * t) / s;
    }
    const cplx scale = std::exp(mu * t);
    return {scale * (ch + shs * (a - mu)), scale * shs * b, scale * shs * c,
            scale * (ch + shs * (d - mu))};
}

}  // namespace

TEST_CASE("classical Runge-Kutta reproduces the degree-4 Taylor polynomial") {
    // On a linear system the four-stage scheme equals the Taylor expansion of
    // exp(lambda dt) truncated after the dt^4 term, exactly.
    const cplx lambda(-0.3, 1.7);
    const double dt = 0.05;
    WaveFunction u = two_point_state({1.0, -0.5}, {0.25, 2.0});
    const WaveFunction v = rk4_step(scalar_rhs(lambda), u, 0.0, dt);
    cplx factor = 0.0;
    cplx term = 1.0;
    for (int k = 0; k <= 4; ++k) {
        factor += term;
        term *= lambda * dt / static_cast<double>(k + 1);
    }
    for (int j = 0; j < u.size(); ++j)
        CHECK(std::abs(v[j] - factor * u[j]) <= 5e-15 * (std::abs(factor * u[j]) + 1.0));
}

TEST_CASE("classical Runge-Kutta converges at fourth order") {
    const cplx lambda(0.0, 2.0);
    const double t_final = 1.0;
    auto run = [&](int steps) {
        WaveFunction u = two_point_state(1.0, {0.0, 1.0});
        const double dt = t_final / steps;
        double t = 0.0;
        for (int k = 0; k < steps; ++k, t += dt)
            u = rk4_step(scalar_rhs(lambda), u, t, dt);
        const cplx exact = std::exp(lambda * t_final);
        return std::abs(u[0] - exact * 1.0) + std::abs(u[1] - exact * cplx(0.0, 1.0));
    };
    const double e1 = run(40);
    const double e2 = run(80);
    const double rate = std::log2(e1 / e2);
    CHECK(rate == doctest::Approx(4.0).epsilon(0.025));
}

TEST_CASE("a non-finite stage aborts with the instability diagnosis") {
    RhsFn blow_up = [](const WaveFunction& u, double, WaveFunction& out) {
        out.rep = u.rep;
        out.values.assign(u.values.size(),
                          cplx(std::numeric_limits<double>::quiet_NaN(), 0.0));
    };
    const WaveFunction u = two_point_state(1.0, 1.0);
    CHECK_THROWS_AS(rk4_step(blow_up, u, 0.0, 0.1, {42.0, 0.0}), InstabilityError);
    try {
        rk4_step(blow_up, u, 0.0, 0.1, {42.0, 0.0});
    } catch (const InstabilityError& e) {
        CHECK(e.interaction_factor == cplx(42.0, 0.0));
        CHECK(e.dt == doctest::Approx(0.1));
    }
}

TEST_CASE("additive tableau satisfies the third-order conditions") {
    const ImexTableau tab = imex_ssp3_433();

    // Strictly lower triangular explicit table, constant implicit diagonal.
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) CHECK(tab.a_explicit[i][j] == 0.0);
    for (int i = 1; i < 4; ++i)
        CHECK(tab.a_implicit[i][i] == doctest::Approx(tab.a_implicit[0][0]).epsilon(1e-15));

    // Row sums define the abscissae.
    for (int i = 0; i < 4; ++i) {
        double se = 0.0, si = 0.0;
        for (int j = 0; j < 4; ++j) {
            se += tab.a_explicit[i][j];
            si += tab.a_implicit[i][j];
        }
        CHECK(se == doctest::Approx(tab.c_explicit[i]).epsilon(1e-14));
        CHECK(si == doctest::Approx(tab.c_implicit[i]).epsilon(1e-14));
    }

    // Classical order conditions, per table: sum b = 1, sum b c = 1/2,
    // sum b c^2 = 1/3, sum b A c = 1/6.
    auto conditions = [&](const double a[4][4], const double c[4]) {
        double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0;
        for (int i = 0; i < 4; ++i) {
            s1 += tab.b[i];
            s2 += tab.b[i] * c[i];
            s3 += tab.b[i] * c[i] * c[i];
            for (int j = 0; j < 4; ++j) s4 += tab.b[i] * a[i][j] * c[j];
        }
        CHECK(s1 == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(s2 == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(s3 == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
        CHECK(s4 == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
    };
    conditions(tab.a_explicit, tab.c_explicit);
    conditions(tab.a_implicit, tab.c_implicit);
}

TEST_CASE("penalty solve satisfies the stage equations") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const cplx l(std::exp(dist(rng) * 5.0), 0.0);
        const double coeff = 0.24169426078821;
        const cplx u0(dist(rng), dist(rng));
        const cplx un(dist(rng), dist(rng));
        const auto [v0, vn] = penalty_solve(l, coeff, u0, un);
        const cplx jump = v0 - vn;
        const cplx i_cl = cplx(0.0, 1.0) * coeff * l;
        // Backward-error residual of the 2x2 stage system: forming the jump
        // from v0 - vn cancels, so the raw residual grows like |l| * eps and
        // the meaningful bound is relative to the row scale.
        const double row_scale = (1.0 + 2.0 * std::abs(i_cl)) *
                                     (std::abs(v0) + std::abs(vn)) +
                                 std::abs(u0) + std::abs(un);
        CHECK(std::abs(v0 + i_cl * jump - u0) <= 1e-14 * row_scale);
        CHECK(std::abs(vn - i_cl * jump - un) <= 1e-14 * row_scale);
        // The sum is untouched; the jump is divided by (1 + 2 i coeff l).
        CHECK(std::abs((v0 + vn) - (u0 + un)) <= 1e-14 * (std::abs(u0 + un) + 1.0));
        CHECK(std::abs(jump - (u0 - un) / (1.0 + 2.0 * i_cl)) <= 1e-13);
    }
}

TEST_CASE("additive step with zero coupling is the plain explicit scheme") {
    const ImexTableau tab = imex_ssp3_433();
    const cplx lambda(0.0, -1.3);
    const WaveFunction u = two_point_state({0.7, 0.1}, {-0.4, 0.9});
    const double dt = 0.02;
    const WaveFunction got = imex_step(scalar_rhs(lambda), {0.0, 0.0}, tab, u, 0.0, dt);

    // Hand-rolled explicit Runge-Kutta over the same table.
    std::array<WaveFunction, 4> k;
    RhsFn rhs = scalar_rhs(lambda);
    for (int i = 0; i < 4; ++i) {
        WaveFunction stage = u;
        for (int j = 0; j < i; ++j)
            for (int m = 0; m < u.size(); ++m)
                stage.values[m] += dt * tab.a_explicit[i][j] * k[j][m];
        rhs(stage, dt * tab.c_explicit[i], k[i]);
    }
    WaveFunction want = u;
    for (int i = 0; i < 4; ++i)
        for (int m = 0; m < u.size(); ++m)
            want.values[m] += dt * tab.b[i] * k[i][m];

    for (int m = 0; m < u.size(); ++m)
        CHECK(std::abs(got[m] - want[m]) <= 1e-15);
}

TEST_CASE("additive step converges at third order against the matrix exponential") {
    // Two coupled values: explicit part diag(-i w0, -i wn), stiff penalty of
    // strength L. Full generator M = [[-i(w0+L), iL], [iL, -i(wn+L)]].
    const double w0 = 1.0, wn = 2.0, L = 4.0, t_final = 0.5;
    const cplx I(0.0, 1.0);
    const auto E = expm2(-I * (w0 + L), I * L, I * L, -I * (wn + L), t_final);
    const cplx a0(1.0, 0.0), an(0.5, -0.5);
    const cplx exact0 = E[0] * a0 + E[1] * an;
    const cplx exactn = E[2] * a0 + E[3] * an;

    RhsFn expl = [&](const WaveFunction& u, double, WaveFunction& out) {
        out.rep = u.rep;
        out.values.resize(2);
        out.values[0] = -I * w0 * u[0];
        out.values[1] = -I * wn * u[1];
    };
    const ImexTableau tab = imex_ssp3_433();
    auto run = [&](int steps) {
        WaveFunction u = two_point_state(a0, an);
        const double dt = t_final / steps;
        double t = 0.0;
        for (int k = 0; k < steps; ++k, t += dt)
            u = imex_step(expl, {L, 0.0}, tab, u, t, dt);
        return std::abs(u[0] - exact0) + std::abs(u[1] - exactn);
    };
    const double e1 = run(64);
    const double e2 = run(128);
    const double rate = std::log2(e1 / e2);
    CHECK(rate == doctest::Approx(3.0).epsilon(0.07));

    // The exact evolution is unitary up to the interface damping; a huge
    // coupling must not blow the step up (the implicit table is L-stable).
    WaveFunction u = two_point_state(1.0, -1.0);
    for (int k = 0; k < 50; ++k)
        u = imex_step(expl, {1e8, 0.0}, tab, u, 0.0, 1e-3);
    CHECK(std::abs(u[0]) <= 1.5);
    CHECK(std::abs(u[1]) <= 1.5);
}

TEST_CASE("evolution lands exactly on the uniform sample times") {
    const GridCircle g = make_grid(2.0, 16);
    const PeriodicStencil st = make_periodic_stencil(2, g);
    SchemeConfig cfg;
    cfg.periodic = &st;
    StepPolicy policy;
    policy.cfl_factor = 1.0;  // dt = dx^2 = 0.015625
    const double t_final = 7.3 * policy.dt(g);

    std::vector<int> ids;
    std::vector<double> times;
    WaveFunction u0 = sample_initial_data({}, g, Representation::periodic);
    evolve(cfg, Integrator::rk4, u0, t_final, policy, 3,
           [&](int s, double t, const WaveFunction&) {
               ids.push_back(s);
               times.push_back(t);
           });
    REQUIRE(ids.size() == 4);
    for (int s = 0; s <= 3; ++s) {
        CHECK(ids[s] == s);
        CHECK(times[s] == doctest::Approx(t_final * s / 3.0).epsilon(1e-15));
    }
}

TEST_CASE("sample count is capped by the nominal step count") {
    const GridCircle g = make_grid(2.0, 16);
    const PeriodicStencil st = make_periodic_stencil(2, g);
    SchemeConfig cfg;
    cfg.periodic = &st;
    StepPolicy policy;
    policy.cfl_factor = 0.5;
    const double t_final = policy.dt(g);  // exactly one step

    int calls = 0;
    WaveFunction u0 = sample_initial_data({}, g, Representation::periodic);
    evolve(cfg, Integrator::rk4, u0, t_final, policy, 100,
           [&](int, double, const WaveFunction&) { ++calls; });
    CHECK(calls == 2);  // t = 0 and t = t_final
}

TEST_CASE("sample times agree across resolutions") {
    SchemeConfig cfg;
    StepPolicy policy;
    policy.cfl_factor = 0.25;
    const double t_final = 0.01;
    auto collect = [&](int n) {
        const GridCircle g = make_grid(2.0, n);
        const PeriodicStencil st = make_periodic_stencil(4, g);
        cfg.periodic = &st;
        std::vector<double> times;
        WaveFunction u0 = sample_initial_data({}, g, Representation::periodic);
        evolve(cfg, Integrator::rk4, u0, t_final, policy, 5,
               [&](int, double t, const WaveFunction&) { times.push_back(t); });
        return times;
    };
    const auto a = collect(32);
    const auto b = collect(64);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("runaway interface coupling surfaces as a typed instability") {
    const GridCircle g = make_grid(2.0, 32);
    const SbpOperator op = make_sbp_operator(4, g);
    SchemeConfig cfg;
    cfg.op = &op;
    cfg.l_scaling = LScaling::dx_pow3;
    cfg.interaction_factor = {
        resolve_interaction_factor(LScaling::dx_pow3, 1e6, op), 0.0};
    StepPolicy policy;
    policy.cfl_factor = 0.25;
    WaveFunction u0 = sample_initial_data({}, g, Representation::interface);
    try {
        evolve(cfg, Integrator::rk4, u0, 0.1, policy, 10, {});
        FAIL("expected the explicit integrator to overflow");
    } catch (const InstabilityError& e) {
        CHECK(e.step >= 1);
        CHECK(e.dt == doctest::Approx(policy.dt(g)).epsilon(1e-12));
        CHECK(e.interaction_factor.real() == doctest::Approx(cfg.interaction_factor.real()));
    }
}
