#include <doctest.h>

#include <cmath>
#include <random>

#include "merid/constants.hpp"
#include "merid/errors.hpp"
#include "merid/quadrature.hpp"
#include "merid/special.hpp"
#include "oracles.hpp"

using namespace merid;

TEST_SUITE("special") {

TEST_CASE("erf against long-double reference on [0,6]") {
    double worst = 0.0;
    for (int i = 0; i <= 600; ++i) {
        const double x = i / 100.0;
        const double ref = static_cast<double>(oracles::erf_reference(x));
        worst = std::max(worst, std::fabs(merid::erf(x) - ref));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("erf basics") {
    CHECK(merid::erf(0.0) == 0.0);
    CHECK(merid::erf(-1.25) == doctest::Approx(-merid::erf(1.25)).epsilon(1e-15));
    CHECK(merid::erf(30.0) == 1.0);
    CHECK(merid::erfc(0.7) == doctest::Approx(1.0 - merid::erf(0.7)).epsilon(1e-14));
    CHECK(merid::erfc(5.0)
          == doctest::Approx(static_cast<double>(oracles::erfc_tail(5.0L))).epsilon(1e-12));
    CHECK(merid::erfc(-2.0) == doctest::Approx(2.0 - merid::erfc(2.0)).epsilon(1e-14));
}

TEST_CASE("quadrature on smooth gaussians") {
    // Int e^{-t^2} over [-8, 8] = sqrt(pi)
    const double val = integrate([](double t) { return std::exp(-t * t); }, -8.0, 8.0, 1e-12);
    CHECK(val == doctest::Approx(std::sqrt(consts::pi)).epsilon(1e-12));

    // antisymmetric interval flip
    const double fwd = integrate([](double t) { return t * t * t + 2.0; }, 0.0, 3.0, 1e-12);
    const double bwd = integrate([](double t) { return t * t * t + 2.0; }, 3.0, 0.0, 1e-12);
    CHECK(fwd == doctest::Approx(3.0 * 3.0 * 3.0 * 3.0 / 4.0 + 6.0).epsilon(1e-12));
    CHECK(bwd == doctest::Approx(-fwd).epsilon(1e-14));
}

TEST_CASE("quadrature resolves an interior spike with knots") {
    // bump of width 1e-6 at 0.3333 inside [0, 1000]; the top-level rule sees
    // zero everywhere without the presplit
    const double c = 0.33333, w = 1e-6;
    auto bump = [&](double t) {
        const double z = (t - c) / w;
        return std::exp(-z * z);
    };
    const double exact = std::sqrt(consts::pi) * w;
    const double got = integrate(bump, 0.0, 1000.0, 1e-10 * exact,
                                 {c - 8 * w, c - w, c, c + w, c + 8 * w});
    CHECK(got == doctest::Approx(exact).epsilon(1e-8));
}

TEST_CASE("quadrature reports non-convergence") {
    // noisy integrand never satisfies the tolerance
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    auto noisy = [&](double) { return dist(rng); };
    CHECK_THROWS_AS(integrate(noisy, 0.0, 1.0, 1e-14, {}, 64), NumericalError);
}

}  // TEST_SUITE
