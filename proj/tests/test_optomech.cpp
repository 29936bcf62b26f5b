#include <doctest.h>

#include <cmath>

#include "merid/errors.hpp"
#include "merid/gaussian.hpp"
#include "merid/optomech.hpp"

using namespace merid;

namespace {

CavitySpec fiber_cavity() {
    DefaultParameterSet tab;
    return CavitySpec(tab.finesse, tab.cavity_length, tab.wavelength, tab.waist);
}

}  // namespace

TEST_SUITE("optomech") {

TEST_CASE("coupling rate") {
    DefaultParameterSet tab;
    const auto cav = fiber_cavity();
    const auto trap = tab.make_trap();
    const auto s50 = tab.make_sphere(50e-9, 200.0);

    CHECK(coupling_g0(s50, cav, trap) == doctest::Approx(134.01).epsilon(1e-3));

    // x0^2 V cancels the volume: g0 is independent of the radius at fixed omega
    const auto s100 = tab.make_sphere(100e-9, 200.0);
    CHECK(coupling_g0(s100, cav, trap)
          == doctest::Approx(coupling_g0(s50, cav, trap)).epsilon(1e-9));

    // and scales linearly in volume at fixed zero-point motion: halving the
    // mode volume doubles it
    const CavitySpec tight(cav.finesse, cav.length / 2.0, cav.wavelength, cav.waist);
    CHECK(coupling_g0(s50, tight, trap)
          == doctest::Approx(2.0 * coupling_g0(s50, cav, trap)).epsilon(1e-9));

    // far-detuned-cavity regime claim: kappa well above g0
    CHECK(cavity_kappa(s50, cav) / coupling_g0(s50, cav, trap) > 10.0);
}

TEST_CASE("cavity decay") {
    DefaultParameterSet tab;
    const auto cav = fiber_cavity();
    const auto s50 = tab.make_sphere(50e-9, 200.0);

    const double empty = consts::pi * consts::c / (cav.finesse * cav.length);
    CHECK(empty == doctest::Approx(3.6224e9).epsilon(1e-4));
    CHECK(cavity_kappa(s50, cav) == doctest::Approx(3.9869e9).epsilon(1e-4));

    // the sphere-free limit is the finesse term alone
    const auto tiny = tab.make_sphere(1e-10, 200.0);
    CHECK(cavity_kappa(tiny, cav) == doctest::Approx(empty).epsilon(1e-9));

    // light-scattering term grows as V^2
    const auto s100 = tab.make_sphere(100e-9, 200.0);
    CHECK(cavity_kappa(s100, cav) - empty
          == doctest::Approx(64.0 * (cavity_kappa(s50, cav) - empty)).epsilon(1e-9));
}

TEST_CASE("photon number compensates the readout phase") {
    DefaultParameterSet tab;
    const auto trap = tab.make_trap();
    const double g0 = 134.0, kappa = 4e9;

    for (double wt : {12.0, 30.0, 100.0}) {
        const double t1 = wt / trap.omega;
        const double exact = photon_number(t1, trap, g0, kappa);
        const double approx = photon_number_approx(t1, trap, g0, kappa);
        CHECK(std::fabs(exact - approx) / exact < 0.011);

        // with the exact photon number, the drive phase 2 gbar n_ph / kappa
        // equals omega t1 / 4 identically
        const double sigma2_over_x02 = 1.0 + wt * wt;
        const double gbar = g0 * sigma2_over_x02;
        const double phi_ds = 2.0 * gbar * exact / kappa;
        CHECK(phi_ds == doctest::Approx(trap.omega * t1 / 4.0).epsilon(1e-12));
    }
    // approximate form decreases in t1
    CHECK(photon_number_approx(2e-3, trap, g0, kappa)
          < photon_number_approx(1e-3, trap, g0, kappa));
}

TEST_CASE("measurement strength closed form and consistency") {
    DefaultParameterSet tab;
    const auto trap = tab.make_trap();
    const double g0 = 134.0, kappa = 4e9;

    CHECK(measurement_strength(0.0, trap, g0, kappa) == 0.0);
    const double chi1 = measurement_strength(1e-3, trap, g0, kappa);
    CHECK(measurement_strength(4e-3, trap, g0, kappa) == doctest::Approx(8.0 * chi1)
                                                             .epsilon(1e-12));

    // pulsed-readout route 2 sqrt(2) gbar sqrt(n_ph)/kappa reproduces it
    for (double wt : {12.0, 40.0, 200.0}) {
        const double t1 = wt / trap.omega;
        const double gbar = g0 * (1.0 + wt * wt);
        const double n_ph = photon_number_approx(t1, trap, g0, kappa);
        const double from_pulse = 2.0 * std::sqrt(2.0) * gbar * std::sqrt(n_ph) / kappa;
        const double closed = measurement_strength(t1, trap, g0, kappa);
        CHECK(std::fabs(from_pulse - closed) / closed < 0.011);
    }
}

TEST_CASE("scattering localization of the readout light") {
    DefaultParameterSet tab;
    const auto cav = fiber_cavity();
    const auto trap = tab.make_trap();
    const auto s50 = tab.make_sphere(50e-9, 200.0);

    const auto sc = scattering_localization(s50, cav, trap);
    CHECK(sc.lambda0_sc == doctest::Approx(3.389e22).epsilon(1e-3));
    CHECK(sc.gamma0_sc == doctest::Approx(2.468).epsilon(1e-3));

    // V^2 scaling
    const auto s100 = tab.make_sphere(100e-9, 200.0);
    CHECK(scattering_localization(s100, cav, trap).lambda0_sc
          == doctest::Approx(64.0 * sc.lambda0_sc).epsilon(1e-9));

    // k^6: halving the wavelength multiplies by 64
    const CavitySpec blue(cav.finesse, cav.length, cav.wavelength / 2.0, cav.waist);
    CHECK(scattering_localization(s50, blue, trap).lambda0_sc
          == doctest::Approx(64.0 * sc.lambda0_sc).epsilon(1e-9));
}

TEST_CASE("expansion-time bound") {
    DefaultParameterSet tab;
    const auto cav = fiber_cavity();
    const auto trap = tab.make_trap();

    // millisecond scale below 100 nm diameter
    for (double D : {20e-9, 50e-9, 99e-9}) {
        const auto b = t1_bound(tab.make_sphere(D / 2.0, 200.0), cav, trap);
        CHECK(b.t1_om > 0.1e-3);
        CHECK(b.t1_om < 100e-3);
        CHECK(b.t1_om == doctest::Approx(std::min(b.adiabatic_value, b.scattering_value))
                             .epsilon(1e-12));
    }

    // small spheres are adiabatic-limited, large ones scattering-limited
    CHECK(t1_bound(tab.make_sphere(10e-9, 200.0), cav, trap).branch
          == OptomechBranch::adiabatic);
    CHECK(t1_bound(tab.make_sphere(50e-9, 200.0), cav, trap).branch
          == OptomechBranch::scattering);

    // beyond the crossover the bound falls as 1/V
    const auto b50 = t1_bound(tab.make_sphere(25e-9, 200.0), cav, trap);
    const auto b100 = t1_bound(tab.make_sphere(50e-9, 200.0), cav, trap);
    REQUIRE(b50.branch == OptomechBranch::scattering);
    REQUIRE(b100.branch == OptomechBranch::scattering);
    CHECK(b100.t1_om == doctest::Approx(b50.t1_om / 8.0).epsilon(1e-6));

    // a much better cavity shrinks sqrt(kappa/g0) until the adiabatic
    // condition binds instead of light scattering
    const CavitySpec better(cav.finesse * 1e4, cav.length, cav.wavelength, cav.waist);
    CHECK(t1_bound(tab.make_sphere(25e-9, 200.0), better, trap).branch
          == OptomechBranch::adiabatic);
}

TEST_CASE("measurement-strength bound closes the chain") {
    DefaultParameterSet tab;
    const auto cav = fiber_cavity();
    const auto trap = tab.make_trap();

    for (double D : {20e-9, 30e-9, 40e-9, 50e-9, 80e-9, 100e-9}) {
        const auto sphere = tab.make_sphere(D / 2.0, 200.0);
        const auto t1b = t1_bound(sphere, cav, trap);
        const auto chib = chi_upper_bound(sphere, cav, trap);
        CHECK(chib.branch == t1b.branch);
        const double g0 = coupling_g0(sphere, cav, trap);
        const double kappa = cavity_kappa(sphere, cav);
        CHECK(std::fabs(measurement_strength(t1b.t1_om, trap, g0, kappa) - chib.chi_max)
              / chib.chi_max < 0.01);
    }

    // several tens at small diameters
    for (double D : {20e-9, 30e-9, 40e-9, 50e-9}) {
        const auto chib = chi_upper_bound(tab.make_sphere(D / 2.0, 200.0), cav, trap);
        CHECK(chib.chi_max >= 10.0);
        CHECK(chib.chi_max <= 100.0);
    }
}

TEST_CASE("adiabatic elimination holds at the recommended operating point") {
    DefaultParameterSet tab;
    const auto cav = fiber_cavity();
    const auto trap = tab.make_trap();
    for (double D : {20e-9, 50e-9, 100e-9, 200e-9}) {
        const auto sphere = tab.make_sphere(D / 2.0, 200.0);
        const auto b = t1_bound(sphere, cav, trap);
        const double t1 = b.t1_om / 4.0;
        const double gbar = coupling_g0(sphere, cav, trap) * std::pow(t1 * trap.omega, 2);
        CHECK(cavity_kappa(sphere, cav) / gbar >= 16.0 * (1.0 - 1e-9));
    }
}

TEST_CASE("pulsed regime check") {
    const TrapSpec trap(2.0 * consts::pi * 1e5, 0.1);
    CHECK(pulsed_regime_check(trap, 0.01 / trap.omega));
    CHECK_FALSE(pulsed_regime_check(trap, 10.0 / trap.omega));
    // boundary: (2 nbar + 1) omega T / 4 == threshold exactly
    const double T_edge = 0.4 / (1.2 * trap.omega);
    CHECK_FALSE(pulsed_regime_check(trap, T_edge));
    CHECK(pulsed_regime_check(trap, T_edge * 0.999));
    CHECK_THROWS_AS(pulsed_regime_check(trap, 0.0), DomainError);
}

TEST_CASE("bundle carries consistent values") {
    DefaultParameterSet tab;
    const auto cav = fiber_cavity();
    const auto trap = tab.make_trap();
    const auto sphere = tab.make_sphere(25e-9, 200.0);
    const auto b = optomech_bounds(sphere, cav, trap);
    CHECK(b.g0 == doctest::Approx(coupling_g0(sphere, cav, trap)).epsilon(1e-15));
    CHECK(b.kappa == doctest::Approx(cavity_kappa(sphere, cav)).epsilon(1e-15));
    CHECK(b.t1_om == doctest::Approx(t1_bound(sphere, cav, trap).t1_om).epsilon(1e-15));
    CHECK(b.chi_max == doctest::Approx(chi_upper_bound(sphere, cav, trap).chi_max)
                           .epsilon(1e-15));
}

}  // TEST_SUITE
