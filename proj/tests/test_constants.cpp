#include <doctest.h>

#include <cmath>
#include <random>

#include "merid/constants.hpp"
#include "merid/errors.hpp"

using namespace merid;

TEST_SUITE("constants") {

TEST_CASE("codata set is self-consistent") {
    PhysicalConstants pc;
    CHECK_NOTHROW(pc.validate());
    CHECK(std::abs(std::sqrt(pc.G * pc.hbar / std::pow(pc.c, 3)) - pc.l_planck)
          < 1e-6 * pc.l_planck);
    CHECK(std::abs(std::sqrt(pc.hbar * pc.c / pc.G) - pc.m_planck) < 1e-6 * pc.m_planck);
}

TEST_CASE("torr conversion") {
    CHECK(torr_to_pascal(0.0) == 0.0);
    CHECK(torr_to_pascal(1.0) == doctest::Approx(133.322368).epsilon(1e-12));
    CHECK(torr_to_pascal(1e-12) == doctest::Approx(1.33322368e-10).epsilon(1e-12));
    CHECK_THROWS_AS(torr_to_pascal(-1.0), DomainError);
    CHECK_THROWS_AS(pascal_to_torr(-1.0), DomainError);

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-16.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const double p = std::pow(10.0, dist(rng));
        CHECK(pascal_to_torr(torr_to_pascal(p)) == doctest::Approx(p).epsilon(1e-12));
    }
}

TEST_CASE("sphere mass") {
    DefaultParameterSet tab;
    const auto s = tab.make_sphere(50e-9, 200.0);
    // rho (4/3) pi R^3 evaluated in extended precision
    const long double expected = 2201.0L * 4.0L / 3.0L
                                 * 3.14159265358979323846264338328L * 1.25e-22L;
    CHECK(sphere_mass(s) == doctest::Approx(static_cast<double>(expected)).epsilon(1e-12));
    CHECK(sphere_mass(s) == doctest::Approx(1.152e-18).epsilon(1e-3));

    CHECK_THROWS_AS(tab.make_sphere(0.0, 200.0), DomainError);
    CHECK_THROWS_AS(tab.make_sphere(-1e-9, 200.0), DomainError);

    const auto s2 = tab.make_sphere(100e-9, 200.0);
    CHECK(sphere_mass(s2) == doctest::Approx(8.0 * sphere_mass(s)).epsilon(1e-12));

    // strictly monotone in radius and density
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> rdist(1e-9, 5e-6);
    std::uniform_real_distribution<double> rhodist(100.0, 20000.0);
    for (int i = 0; i < 100; ++i) {
        const double r = rdist(rng), rho = rhodist(rng);
        const SphereSpec a(r, rho, {2.1, 0.0}, {2.1, 0.57}, 1.0);
        const SphereSpec b(r * 1.01, rho, {2.1, 0.0}, {2.1, 0.57}, 1.0);
        const SphereSpec c(r, rho * 1.01, {2.1, 0.0}, {2.1, 0.57}, 1.0);
        CHECK(sphere_mass(b) > sphere_mass(a));
        CHECK(sphere_mass(c) > sphere_mass(a));
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(SphereSpec(1e-9, 1000.0, {2.1, -1e-3}, {2.1, 0.57}, 1.0), DomainError);
    CHECK_THROWS_AS(SphereSpec(1e-9, 1000.0, {2.1, 0.0}, {2.1, -0.1}, 1.0), DomainError);
    CHECK_THROWS_AS(SphereSpec(1e-9, 1000.0, {2.1, 0.0}, {2.1, 0.57}, -1.0), DomainError);
    CHECK_THROWS_AS(EnvironmentSpec(-1.0, 4.5, 1e-26), DomainError);
    CHECK_THROWS_AS(EnvironmentSpec(1.0, 0.0, 1e-26), DomainError);
    CHECK_THROWS_AS(TrapSpec(0.0, 0.1), DomainError);
    CHECK_THROWS_AS(TrapSpec(1e5, -0.1), DomainError);
}

TEST_CASE("default table values") {
    DefaultParameterSet tab;
    CHECK(tab.density == 2201.0);
    CHECK(tab.eps_optical == std::complex<double>(2.1, 1e-10));
    CHECK(tab.omega == doctest::Approx(2.0 * consts::pi * 1e5).epsilon(1e-15));
    CHECK(tab.nbar == 0.1);
    CHECK(tab.T_env == 4.5);
    CHECK(tab.gas_mass == doctest::Approx(28.97 * consts::amu).epsilon(1e-15));
    CHECK(tab.eps_bb == std::complex<double>(2.1, 0.57));
    CHECK(tab.delta_x == 0.1e-9);
    CHECK(tab.finesse == 1.3e5);
    CHECK(tab.cavity_length == 2e-6);
    CHECK(tab.wavelength == 1064e-9);
    CHECK(tab.waist == 1.5e-6);
}

}  // TEST_SUITE
