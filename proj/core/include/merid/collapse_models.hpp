#pragma once

#include <string>
#include <variant>

#include "merid/constants.hpp"
#include "merid/localization.hpp"

namespace merid {

/// Spontaneous-localization parameters: single-nucleon rate and localization
/// distance. grw() returns the original conservative values (1e-16 Hz, 100 nm).
struct CslParams {
    double gamma0;   // 1/s
    double a_csl;    // m

    CslParams(double gamma0, double a_csl);

    static CslParams grw();
    /// GRW values with the single-nucleon rate scaled by `multiplier`.
    static CslParams grw_scaled(double multiplier);
};

/// Sphere form factor f(x) = (6/x^4) [1 - 2/x^2 + (1 + 2/x^2) e^(-x^2)];
/// f(0) = 1, f(1) ~= 0.62, f -> 6/x^4 for large x. A series branch below
/// x = 0.1 avoids the catastrophic cancellation of the direct form.
double csl_shape_f(double x);

LocalizationModel csl_model(const SphereSpec& sphere, const CslParams& params);

/// Wormhole-scattering collapse: Lambda = c^4 m^2 m0^4 / (hbar^3 mP^3), with a
/// kilometer-scale localization distance a = hbar mP / (2 c m0^2).
LocalizationModel qg_model(const SphereSpec& sphere);

/// Gravitational self-energy collapse for a homogeneous sphere:
/// Lambda = G m^2 / (2 R^3 hbar), saturating at gamma = 6 G m^2 / (5 R hbar).
/// a = sqrt(3/5) R keeps both published limits exact.
LocalizationModel dp_model(const SphereSpec& sphere);

/// Microscopic-density variant: the sphere modeled as a conglomerate of
/// r0-sized grains, Lambda scaled by (R/r0)^3 and a = r0/2. Requires r0 <= R.
LocalizationModel dp_microscopic_model(const SphereSpec& sphere, double r0);

/// Space-time imprecision collapse in the no-breathing limit: pure-quadratic
/// with Lambda = hbar / (8 m a_c^4), a_c the extended-body coherence cell.
LocalizationModel k_model(const SphereSpec& sphere);

/// Extended-body coherence cell (R/l_P)^(2/3) l_C used by k_model for solid
/// spheres; point particles would instead carry the cell (l_C/l_P)^2 l_C.
double k_coherence_cell(const SphereSpec& sphere);
double k_coherence_cell_point(const SphereSpec& sphere);
/// Radius at which the two cell expressions coincide, l_C^3 / l_P^2.
double k_crossover_radius(const SphereSpec& sphere);

struct CslId {
    CslParams params = CslParams::grw();
};
struct QgId {};
struct DpId {};
struct DpMicroId {
    double r0;   // m
};
struct KId {};

using CollapseModelId = std::variant<CslId, QgId, DpId, DpMicroId, KId>;

LocalizationModel model_for(const CollapseModelId& id, const SphereSpec& sphere);

/// Selection-string grammar: csl | csl:adler=<mult> | qg | dp |
/// dp-micro:r0=<nm> | k. Throws DomainError on anything else.
CollapseModelId parse_collapse_model(const std::string& text);
std::string collapse_model_name(const CollapseModelId& id);

}  // namespace merid
