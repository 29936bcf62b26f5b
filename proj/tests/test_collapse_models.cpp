#include <doctest.h>

#include <cmath>

#include "merid/collapse_models.hpp"
#include "merid/errors.hpp"
#include "merid/standard_decoherence.hpp"

using namespace merid;

namespace {

// expected Lambda of the space-time imprecision model, directly from the
// extended-body cell definition
double k_lambda_reference(const SphereSpec& s) {
    const double m = sphere_mass(s);
    const double l_c = consts::hbar / (m * consts::c);
    const double a_c = std::pow(s.radius / consts::l_planck, 2.0 / 3.0) * l_c;
    return consts::hbar / (8.0 * m * std::pow(a_c, 4));
}

}  // namespace

TEST_SUITE("collapse_models") {

TEST_CASE("sphere form factor") {
    CHECK(csl_shape_f(0.0) == 1.0);
    CHECK(csl_shape_f(1.0) == doctest::Approx(0.62).epsilon(0.008));
    // 6/x^4 [1 - 2/x^2 + (1+2/x^2) e^{-x^2}] at x = 10, evaluated independently
    CHECK(csl_shape_f(10.0) == doctest::Approx(5.8812e-4).epsilon(1e-4));
    // asymptote f -> 6/x^4
    CHECK(csl_shape_f(50.0) * std::pow(50.0, 4) / 6.0 == doctest::Approx(1.0).epsilon(1e-2));

    // series and direct branches agree at the switchover
    CHECK(std::fabs(csl_shape_f(0.0999999999) - csl_shape_f(0.1000000001)) < 1e-10);

    // continuous, monotone decreasing
    double prev = 1.0 + 1e-15;
    for (int i = 0; i <= 400; ++i) {
        const double x = 8.0 * i / 400.0;
        const double f = csl_shape_f(x);
        CHECK(f < prev);
        CHECK(f > 0.0);
        prev = f;
    }
}

TEST_CASE("spontaneous localization model") {
    DefaultParameterSet tab;
    const auto params = CslParams::grw();
    CHECK(params.gamma0 == 1e-16);
    CHECK(params.a_csl == 100e-9);

    // small sphere: gamma grows with the squared nucleon number
    const auto tiny = tab.make_sphere(5e-9, 4.5);
    const double n2 = std::pow(sphere_mass(tiny) / consts::m_nucleon, 2);
    const auto m_tiny = csl_model(tiny, params);
    CHECK(m_tiny.gamma() == doctest::Approx(n2 * 1e-16 * csl_shape_f(0.05)).epsilon(1e-12));
    CHECK(m_tiny.gamma() / (n2 * 1e-16) == doctest::Approx(1.0).epsilon(2e-3));

    // R = a_csl carries the f(1) = 0.62 factor
    const auto match = tab.make_sphere(100e-9, 4.5);
    const auto m_match = csl_model(match, params);
    const double n2m = std::pow(sphere_mass(match) / consts::m_nucleon, 2);
    CHECK(m_match.gamma() / (n2m * 1e-16) == doctest::Approx(0.62).epsilon(0.008));

    // Lambda two ways
    const auto s = tab.make_sphere(50e-9, 4.5);
    const auto m = csl_model(s, params);
    const double lambda_direct = std::pow(sphere_mass(s) / consts::m_nucleon, 2) * 1e-16
                                 / (4.0 * 100e-9 * 100e-9) * csl_shape_f(0.5);
    CHECK(m.lambda() == doctest::Approx(lambda_direct).epsilon(1e-12));
    CHECK(m.gamma() / (4.0 * m.a() * m.a()) == doctest::Approx(m.lambda()).epsilon(1e-12));

    CHECK(csl_model(s, CslParams::grw_scaled(1e4)).lambda()
          == doctest::Approx(1e4 * m.lambda()).epsilon(1e-12));
}

TEST_CASE("wormhole-scattering model") {
    DefaultParameterSet tab;
    const auto s = tab.make_sphere(50e-9, 4.5);
    const auto m = qg_model(s);
    CHECK(m.a() == doctest::Approx(1388.0).epsilon(1e-2));
    CHECK(m.lambda() == doctest::Approx(6.746e15).epsilon(1e-3));
    // Lambda ~ m^2: doubling the radius (8x mass) gives 64x
    const auto big = qg_model(tab.make_sphere(100e-9, 4.5));
    CHECK(big.lambda() == doctest::Approx(64.0 * m.lambda()).epsilon(1e-9));
}

TEST_CASE("gravitational self-energy model keeps both published limits") {
    DefaultParameterSet tab;
    const auto s = tab.make_sphere(50e-9, 4.5);
    const double mass = sphere_mass(s);
    const auto m = dp_model(s);
    const double lambda_expected = consts::G * mass * mass
                                   / (2.0 * std::pow(50e-9, 3) * consts::hbar);
    const double gamma_expected = 6.0 * consts::G * mass * mass / (5.0 * 50e-9 * consts::hbar);
    CHECK(m.lambda() == doctest::Approx(lambda_expected).epsilon(1e-12));
    CHECK(m.lambda() == doctest::Approx(3.362e9).epsilon(1e-3));
    CHECK(m.gamma() == doctest::Approx(gamma_expected).epsilon(1e-12));
    CHECK(m.gamma() / (4.0 * m.a() * m.a()) == doctest::Approx(m.lambda()).epsilon(1e-12));
    CHECK(m.a() == doctest::Approx(std::sqrt(0.6) * 50e-9).epsilon(1e-12));
}

TEST_CASE("grained-density variant") {
    DefaultParameterSet tab;
    const auto s = tab.make_sphere(50e-9, 4.5);
    const auto base = dp_model(s);

    const auto same = dp_microscopic_model(s, 50e-9);
    CHECK(same.lambda() == doctest::Approx(base.lambda()).epsilon(1e-12));
    CHECK(same.a() == doctest::Approx(25e-9).epsilon(1e-12));

    const auto fine = dp_microscopic_model(s, 1e-9);
    CHECK(fine.lambda() == doctest::Approx(1.25e5 * base.lambda()).epsilon(1e-12));
    const auto finer = dp_microscopic_model(s, 0.5e-9);
    CHECK(finer.lambda() == doctest::Approx(8.0 * fine.lambda()).epsilon(1e-12));

    CHECK_THROWS_AS(dp_microscopic_model(s, 51e-9), DomainError);
    CHECK_THROWS_AS(dp_microscopic_model(s, 0.0), DomainError);
}

TEST_CASE("space-time imprecision model") {
    DefaultParameterSet tab;
    const auto s = tab.make_sphere(50e-9, 4.5);
    const auto m = k_model(s);
    CHECK(m.kind() == LocalizationKind::pure_quadratic);
    CHECK(m.gamma() == 0.0);
    CHECK(std::isinf(m.a()));
    CHECK(m.lambda() == doctest::Approx(k_lambda_reference(s)).epsilon(1e-12));

    // extended-body cell scaling: Lambda ~ m^3 R^(-8/3), so doubling R at
    // fixed density multiplies Lambda by 2^(19/3)
    const auto big = k_model(tab.make_sphere(100e-9, 4.5));
    CHECK(big.lambda() / m.lambda() == doctest::Approx(std::pow(2.0, 19.0 / 3.0)).epsilon(1e-9));

    // denser sphere at fixed radius localizes faster (Lambda ~ rho^3)
    const SphereSpec dense(50e-9, 2.0 * 2201.0, {2.1, 1e-10}, {2.1, 0.57}, 4.5);
    CHECK(k_model(dense).lambda() == doctest::Approx(8.0 * m.lambda()).epsilon(1e-9));

    // stronger than blackbody for micron spheres at 4.5 K bulk temperature
    const auto micron = tab.make_sphere(0.5e-6, 4.5);
    const auto env = tab.make_environment(0.0);
    CHECK(k_model(micron).lambda() > blackbody_localization(micron, env).total);

    // crossover bookkeeping: cell expressions coincide at l_C^3 / l_P^2
    const double cell = k_coherence_cell(s);
    const double point = k_coherence_cell_point(s);
    CHECK(cell < point);   // solid spheres sit deep in the extended-body branch
    const double l_c = consts::hbar / (sphere_mass(s) * consts::c);
    CHECK(k_crossover_radius(s)
          == doctest::Approx(std::pow(l_c, 3) / (consts::l_planck * consts::l_planck))
                 .epsilon(1e-12));
}

TEST_CASE("dispatch and the selection grammar") {
    DefaultParameterSet tab;
    const auto s = tab.make_sphere(50e-9, 4.5);

    CHECK(model_for(CslId{}, s).lambda()
          == doctest::Approx(csl_model(s, CslParams::grw()).lambda()).epsilon(1e-15));
    CHECK(model_for(QgId{}, s).lambda() == doctest::Approx(qg_model(s).lambda()).epsilon(1e-15));
    CHECK(model_for(DpId{}, s).lambda() == doctest::Approx(dp_model(s).lambda()).epsilon(1e-15));
    CHECK(model_for(KId{}, s).lambda() == doctest::Approx(k_model(s).lambda()).epsilon(1e-15));

    CHECK(collapse_model_name(parse_collapse_model("csl")) == "csl");
    CHECK(collapse_model_name(parse_collapse_model("qg")) == "qg");
    CHECK(collapse_model_name(parse_collapse_model("dp")) == "dp");
    CHECK(collapse_model_name(parse_collapse_model("k")) == "k");

    const auto adler = parse_collapse_model("csl:adler=10000");
    CHECK(model_for(adler, s).lambda()
          == doctest::Approx(1e4 * csl_model(s, CslParams::grw()).lambda()).epsilon(1e-12));

    const auto micro = parse_collapse_model("dp-micro:r0=1");
    CHECK(model_for(micro, s).lambda()
          == doctest::Approx(dp_microscopic_model(s, 1e-9).lambda()).epsilon(1e-12));

    CHECK_THROWS_AS(parse_collapse_model("grw"), DomainError);
    CHECK_THROWS_AS(parse_collapse_model("csl:adler=xx"), DomainError);
    CHECK_THROWS_AS(parse_collapse_model("dp-micro:r0=-3"), DomainError);
}

TEST_CASE("strength ranking across the micron range") {
    DefaultParameterSet tab;
    const auto env = tab.make_environment(0.0);
    for (int i = 0; i <= 16; ++i) {
        const double D = 0.1e-6 * std::pow(20.0, i / 16.0);
        const auto s = tab.make_sphere(D / 2.0, 4.5);
        const double bb = blackbody_localization(s, env).total;
        const double csl = csl_model(s, CslParams::grw()).lambda();
        const double qg = qg_model(s).lambda();
        const double dp = dp_model(s).lambda();
        const double k = k_model(s).lambda();
        CHECK(csl > bb);
        CHECK(qg > bb);
        CHECK(dp > bb);
        CHECK(k > bb);
        CHECK(qg >= csl);
        CHECK(std::min(csl, qg) / std::max(dp, k) >= 1e3);
        // Lambda grows with mass at fixed radius for every model
        const SphereSpec dense(D / 2.0, 1.1 * 2201.0, {2.1, 1e-10}, {2.1, 0.57}, 4.5);
        CHECK(csl_model(dense, CslParams::grw()).lambda() > csl);
        CHECK(qg_model(dense).lambda() > qg);
        CHECK(dp_model(dense).lambda() > dp);
        CHECK(k_model(dense).lambda() > k);
    }
}

}  // TEST_SUITE
