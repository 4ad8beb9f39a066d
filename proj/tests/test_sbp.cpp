#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "schro/errors.hpp"
#include "schro/grid.hpp"
#include "schro/sbp.hpp"

using namespace schro;
using cplx = std::complex<double>;

namespace {

WaveFunction random_state(int n_values, Representation rep, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    WaveFunction u;
    u.rep = rep;
    u.values.reserve(static_cast<size_t>(n_values));
    for (int j = 0; j < n_values; ++j) u.values.push_back({dist(rng), dist(rng)});
    return u;
}

WaveFunction sample_function(const GridCircle& g, Representation rep,
                             double (*f)(double)) {
    WaveFunction u;
    u.rep = rep;
    const int m = g.n_values(rep);
    for (int j = 0; j < m; ++j) u.values.push_back(f(g.x(j)));
    return u;
}

}  // namespace

TEST_CASE("SBP identity holds for every operator at several sizes") {
    std::mt19937 rng(12345);
    for (int order : {2, 4, 6, 8}) {
        for (int n : {16, 64, 256}) {
            const GridCircle g = make_grid(2.0, n);
            const SbpOperator op = make_sbp_operator(order, g);
            for (int trial = 0; trial < 20; ++trial) {
                const WaveFunction u = random_state(n + 1, Representation::interface, rng);
                const WaveFunction v = random_state(n + 1, Representation::interface, rng);
                const double scale =
                    std::abs(weighted_inner(op, u, u)) + std::abs(weighted_inner(op, v, v));
                CHECK(verify_sbp_identity(op, u, v) <= 1e-12 * scale);
            }
        }
    }
}

TEST_CASE("a perturbed closure coefficient breaks the identity") {
    std::mt19937 rng(99);
    const GridCircle g = make_grid(2.0, 64);
    SbpOperator op = make_sbp_operator(8, g);
    op.boundary_closure[2][3] += 1e-8;
    const WaveFunction u = random_state(65, Representation::interface, rng);
    const WaveFunction v = random_state(65, Representation::interface, rng);
    CHECK(verify_sbp_identity(op, u, v) > 1e-10);
}

TEST_CASE("order-2 weights are the trapezoid rule") {
    const GridCircle g = make_grid(2.0, 32);
    const SbpOperator op = make_sbp_operator(2, g);
    CHECK(op.sigma(0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(op.sigma(32) == doctest::Approx(0.5).epsilon(1e-15));
    for (int j = 1; j < 32; ++j) CHECK(op.sigma(j) == 1.0);
}

TEST_CASE("sigma weights are positive, mirrored and consistent") {
    const GridCircle g = make_grid(2.0, 64);
    for (int order : {2, 4, 6, 8}) {
        const SbpOperator op = make_sbp_operator(order, g);
        double head = 0.0;
        for (int j = 0; j < op.closure_rows(); ++j) {
            CHECK(op.sigma(j) > 0.0);
            CHECK(op.sigma(j) == op.sigma(64 - j));  // mirrored tail
            head += op.sigma(j);
        }
        // The quadrature integrates constants exactly: the head weights sum
        // to rows - 1/2 so that the total equals n_intervals.
        CHECK(head == doctest::Approx(op.closure_rows() - 0.5).epsilon(1e-13));
    }
}

TEST_CASE("closure rows differentiate low-degree monomials exactly") {
    const GridCircle g = make_grid(2.0, 64);
    for (int order : {2, 4, 6, 8}) {
        const SbpOperator op = make_sbp_operator(order, g);
        const int p = op.boundary_order;
        for (int deg = 0; deg <= p; ++deg) {
            WaveFunction u;
            u.rep = Representation::interface;
            for (int j = 0; j <= 64; ++j) u.values.push_back(std::pow(g.x(j), deg));
            const WaveFunction d = apply_d(op, u);
            for (int j = 0; j <= 64; ++j) {
                const double want = deg == 0 ? 0.0 : deg * std::pow(g.x(j), deg - 1);
                CHECK(d[j].real() == doctest::Approx(want).epsilon(1e-9).scale(1.0));
                CHECK(d[j].imag() == 0.0);
            }
        }
    }
}

TEST_CASE("interior rows reach the advertised order on a smooth function") {
    // Error of D sin(pi x) at mid-grid, two resolutions, interior point.
    for (int order : {2, 4, 6, 8}) {
        double errs[2];
        int idx = 0;
        for (int n : {64, 128}) {
            const GridCircle g = make_grid(2.0, n);
            const SbpOperator op = make_sbp_operator(order, g);
            const WaveFunction u = sample_function(
                g, Representation::interface, [](double x) { return std::sin(std::numbers::pi * x); });
            const WaveFunction d = apply_d(op, u);
            const int mid = n / 2;
            errs[idx++] = std::abs(
                d[mid].real() -
                std::numbers::pi * std::cos(std::numbers::pi * g.x(mid)));
        }
        const double rate = std::log2(errs[0] / errs[1]);
        CHECK(rate == doctest::Approx(order).epsilon(0.15));
    }
}

TEST_CASE("periodic stencil is antisymmetric in the plain inner product") {
    std::mt19937 rng(7);
    const GridCircle g = make_grid(2.0, 48);
    for (int order : {2, 4, 6, 8}) {
        const PeriodicStencil st = make_periodic_stencil(order, g);
        const WaveFunction u = random_state(48, Representation::periodic, rng);
        const WaveFunction v = random_state(48, Representation::periodic, rng);
        const WaveFunction du = apply_periodic_d(st, u);
        const WaveFunction dv = apply_periodic_d(st, v);
        cplx lhs = 0.0, rhs = 0.0;
        for (int j = 0; j < 48; ++j) {
            lhs += std::conj(u[j]) * dv[j];
            rhs += std::conj(du[j]) * v[j];
        }
        CHECK(std::abs(lhs + rhs) <= 1e-12 * (std::abs(lhs) + std::abs(rhs) + 1.0));
    }
}

TEST_CASE("periodic stencil differentiates plane waves to its order") {
    for (int order : {4, 8}) {
        double errs[2];
        int idx = 0;
        for (int n : {64, 128}) {
            const GridCircle g = make_grid(2.0, n);
            const PeriodicStencil st = make_periodic_stencil(order, g);
            const double k = 2.0 * std::numbers::pi;
            WaveFunction u;
            u.rep = Representation::periodic;
            for (int j = 0; j < n; ++j)
                u.values.push_back(std::exp(cplx(0.0, k * g.x(j))));
            const WaveFunction d = apply_periodic_d(st, u);
            errs[idx++] = std::abs(d[5] - cplx(0.0, k) * u[5]);
        }
        CHECK(std::log2(errs[0] / errs[1]) == doctest::Approx(order).epsilon(0.1));
    }
}

TEST_CASE("weighted inner product matches the sigma quadrature") {
    const GridCircle g = make_grid(2.0, 32);
    const SbpOperator op = make_sbp_operator(4, g);
    WaveFunction ones;
    ones.rep = Representation::interface;
    ones.values.assign(33, 1.0);
    // <1,1> = dx * sum sigma_j = dx * n = length.
    CHECK(weighted_inner(op, ones, ones).real() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(weighted_inner(op, ones, ones).imag() == 0.0);
}

TEST_CASE("operator construction rejects bad input") {
    const GridCircle g = make_grid(2.0, 64);
    CHECK_THROWS_AS(make_sbp_operator(3, g), ConfigError);
    CHECK_THROWS_AS(make_sbp_operator(10, g), ConfigError);
    const GridCircle tiny = make_grid(2.0, 8);
    CHECK_THROWS_AS(make_sbp_operator(8, tiny), ConfigError);  // closure overlap
    CHECK_THROWS_AS(make_periodic_stencil(5, g), ConfigError);
}

TEST_CASE("apply_d rejects representation mismatches") {
    const GridCircle g = make_grid(2.0, 32);
    const SbpOperator op = make_sbp_operator(4, g);
    WaveFunction wrong;
    wrong.rep = Representation::periodic;
    wrong.values.assign(32, 1.0);
    CHECK_THROWS_AS(apply_d(op, wrong), UsageError);
}
