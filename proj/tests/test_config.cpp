#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "merid/config.hpp"
#include "merid/errors.hpp"

using namespace merid;

TEST_SUITE("config") {

TEST_CASE("defaults round-trip unchanged") {
    const DefaultParameterSet defaults;
    const std::string text = parameter_set_to_json_text(defaults);
    const DefaultParameterSet back = parameter_set_from_json_text(text);
    CHECK(back == defaults);

    const auto path = std::filesystem::temp_directory_path() / "merid_config_test.json";
    save_parameter_set(defaults, path.string());
    CHECK(load_parameter_set(path.string()) == defaults);
    std::filesystem::remove(path);
}

TEST_CASE("partial config keeps the remaining defaults") {
    const auto p = parameter_set_from_json_text(R"({"density": 3500.0, "nbar": 0.0})");
    CHECK(p.density == 3500.0);
    CHECK(p.nbar == 0.0);
    const DefaultParameterSet defaults;
    CHECK(p.omega == defaults.omega);
    CHECK(p.eps_bb == defaults.eps_bb);
}

TEST_CASE("unknown and malformed keys are rejected") {
    CHECK_THROWS_AS(parameter_set_from_json_text(R"({"densty": 1.0})"), DomainError);
    CHECK_THROWS_AS(parameter_set_from_json_text(R"({"density": "heavy"})"), DomainError);
    CHECK_THROWS_AS(parameter_set_from_json_text("[1,2,3]"), DomainError);
    CHECK_THROWS_AS(parameter_set_from_json_text("{broken"), DomainError);
    CHECK_THROWS_AS(load_parameter_set("/nonexistent/merid.json"), DomainError);
}

TEST_CASE("single-key overrides") {
    DefaultParameterSet p;
    apply_override(p, "gas_mass_amu", 4.0);
    CHECK(p.gas_mass == doctest::Approx(4.0 * consts::amu).epsilon(1e-15));
    apply_override(p, "eps_bb_im", 0.3);
    CHECK(p.eps_bb.imag() == 0.3);
    CHECK_THROWS_AS(apply_override(p, "not_a_key", 1.0), DomainError);
}

}  // TEST_SUITE
