#include <cmath>
#include <complex>

#include "doctest.h"
#include "schro/errors.hpp"
#include "schro/grid.hpp"

using namespace schro;

TEST_CASE("grid geometry") {
    const GridCircle g = make_grid(2.0, 2000);
    CHECK(g.dx == doctest::Approx(0.001).epsilon(1e-15));
    CHECK(g.x(0) == 0.0);
    CHECK(g.x(2000) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(g.n_values(Representation::interface) == 2001);
    CHECK(g.n_values(Representation::periodic) == 2000);

    CHECK_THROWS_AS(make_grid(0.0, 100), ConfigError);
    CHECK_THROWS_AS(make_grid(2.0, 4), ConfigError);
}

TEST_CASE("initial data envelope and phase") {
    InitialData data;  // defaults: center 1, denominator 20, k = 100 pi
    // At the envelope center the phase factor is exp(i k), magnitude 1.
    CHECK(std::abs(data.at(1.0)) == doctest::Approx(1.0).epsilon(1e-15));
    // At x = 0 the envelope is exp(-1/20).
    CHECK(std::abs(data.at(0.0)) ==
          doctest::Approx(0.951229424500714).epsilon(1e-14));

    InitialData ci = data;
    ci.envelope_denominator = 0.05;
    // exp(-(0.995-1)^2 / 0.05) = exp(-0.0005)
    CHECK(std::abs(ci.at(0.995)) ==
          doctest::Approx(0.9995001249791693).epsilon(1e-14));

    // Real part at the center is cos(k x).
    const double k = data.wave_number;
    CHECK(data.at(1.0).real() == doctest::Approx(std::cos(k)).epsilon(1e-12));
}

TEST_CASE("interface sampling keeps both endpoint values") {
    const GridCircle g = make_grid(2.0, 64);
    InitialData data;
    const WaveFunction u = sample_initial_data(data, g, Representation::interface);
    REQUIRE(u.size() == 65);
    // x=0 and x=2 are one circle point but the envelope is evaluated at both
    // coordinates, so the two stored values differ only via the envelope.
    CHECK(std::abs(u[0]) == doctest::Approx(std::abs(data.at(0.0))).epsilon(1e-14));
    CHECK(std::abs(u[64]) == doctest::Approx(std::abs(data.at(2.0))).epsilon(1e-14));

    const WaveFunction p = sample_initial_data(data, g, Representation::periodic);
    REQUIRE(p.size() == 64);
    for (int j = 0; j < 64; ++j) {
        CHECK(p[j].real() == doctest::Approx(u[j].real()).epsilon(1e-15));
        CHECK(p[j].imag() == doctest::Approx(u[j].imag()).epsilon(1e-15));
    }
}

TEST_CASE("restriction commutes with sampling on nested grids") {
    InitialData data;
    for (Representation rep :
         {Representation::interface, Representation::periodic}) {
        const GridCircle fine = make_grid(2.0, 128);
        const GridCircle coarse = make_grid(2.0, 32);
        const WaveFunction uf = sample_initial_data(data, fine, rep);
        const WaveFunction uc = sample_initial_data(data, coarse, rep);
        const WaveFunction r = restrict_to_coarse(uf, fine, coarse);
        REQUIRE(r.size() == uc.size());
        for (int j = 0; j < r.size(); ++j) CHECK(r[j] == uc[j]);
    }
}

TEST_CASE("restriction rejects non-nested grids") {
    InitialData data;
    const GridCircle fine = make_grid(2.0, 100);
    const GridCircle coarse = make_grid(2.0, 40);  // 100/40 is not integer
    const WaveFunction uf = sample_initial_data(data, fine, Representation::periodic);
    CHECK_THROWS_AS(restrict_to_coarse(uf, fine, coarse), UsageError);

    const GridCircle other = make_grid(1.0, 50);
    CHECK_THROWS_AS(restrict_to_coarse(uf, fine, other), UsageError);
}

TEST_CASE("restriction keeps the source representation") {
    InitialData data;
    const GridCircle fine = make_grid(2.0, 128);
    const GridCircle coarse = make_grid(2.0, 32);
    const WaveFunction uf = sample_initial_data(data, fine, Representation::periodic);
    const WaveFunction r = restrict_to_coarse(uf, fine, coarse);
    CHECK(r.rep == Representation::periodic);
    CHECK(r.size() == 32);
}
