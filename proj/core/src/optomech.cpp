#include "merid/optomech.hpp"

#include <cmath>

#include "merid/errors.hpp"
#include "merid/gaussian.hpp"

namespace merid {

using consts::c;
using consts::pi;

CavitySpec::CavitySpec(double finesse_, double length_, double wavelength_, double waist_)
    : finesse(finesse_), length(length_), wavelength(wavelength_), waist(waist_) {
    if (!(finesse > 0.0) || !(length > 0.0) || !(wavelength > 0.0) || !(waist > 0.0)) {
        throw DomainError("CavitySpec: all parameters must be positive");
    }
}

double CavitySpec::mode_volume() const { return pi * waist * waist * length / 4.0; }

double CavitySpec::k_c() const { return 2.0 * pi / wavelength; }

std::string to_string(OptomechBranch b) {
    return b == OptomechBranch::adiabatic ? "adiabatic" : "scattering";
}

namespace {

double eps_c_of(const SphereSpec& sphere) {
    return 3.0 * ((sphere.eps_optical - 1.0) / (sphere.eps_optical + 2.0)).real();
}

}  // namespace

double coupling_g0(const SphereSpec& sphere, const CavitySpec& cavity, const TrapSpec& trap) {
    const double x0 = zero_point_motion(sphere_mass(sphere), trap.omega);
    const double kc = cavity.k_c();
    return eps_c_of(sphere) * x0 * x0 * kc * kc * kc * c * sphere.volume()
           / (4.0 * cavity.mode_volume());
}

double cavity_kappa(const SphereSpec& sphere, const CavitySpec& cavity) {
    const double kappa_empty = pi * c / (cavity.finesse * cavity.length);
    const double eps_c = eps_c_of(sphere);
    const double V = sphere.volume();
    const double kc = cavity.k_c();
    const double kappa_sc =
        c * eps_c * eps_c * V * V * std::pow(kc, 4) / (16.0 * pi * cavity.mode_volume());
    return kappa_empty + kappa_sc;
}

double photon_number(double t1, const TrapSpec& trap, double g0, double kappa) {
    if (!(t1 > 0.0)) throw DomainError("photon_number: t1 must be positive");
    const double wt = trap.omega * t1;
    return trap.omega * t1 * kappa / (8.0 * g0 * (1.0 + wt * wt));
}

double photon_number_approx(double t1, const TrapSpec& trap, double g0, double kappa) {
    if (!(t1 > 0.0)) throw DomainError("photon_number: t1 must be positive");
    return kappa / (8.0 * g0 * t1 * trap.omega);
}

double measurement_strength(double t1, const TrapSpec& trap, double g0, double kappa) {
    if (t1 < 0.0) throw DomainError("measurement_strength: t1 must be non-negative");
    return std::pow(t1 * trap.omega, 1.5) * std::sqrt(g0 / kappa);
}

ScatteringLocalization scattering_localization(const SphereSpec& sphere,
                                               const CavitySpec& cavity, const TrapSpec& trap) {
    const double eps_c = eps_c_of(sphere);
    const double V = sphere.volume();
    const double kc = cavity.k_c();
    ScatteringLocalization out;
    out.lambda0_sc = eps_c * eps_c * c * V * V * std::pow(kc, 6) / (6.0 * pi * cavity.mode_volume());
    const double x0 = zero_point_motion(sphere_mass(sphere), trap.omega);
    out.gamma0_sc = out.lambda0_sc * x0 * x0;
    return out;
}

T1Bound t1_bound(const SphereSpec& sphere, const CavitySpec& cavity, const TrapSpec& trap) {
    const double g0 = coupling_g0(sphere, cavity, trap);
    const double kappa = cavity_kappa(sphere, cavity);
    const double gamma0_sc = scattering_localization(sphere, cavity, trap).gamma0_sc;
    T1Bound b;
    b.adiabatic_value = std::sqrt(kappa / g0) / trap.omega;
    b.scattering_value = 4.0 * g0 / (gamma0_sc * trap.omega);
    if (b.adiabatic_value <= b.scattering_value) {
        b.t1_om = b.adiabatic_value;
        b.branch = OptomechBranch::adiabatic;
    } else {
        b.t1_om = b.scattering_value;
        b.branch = OptomechBranch::scattering;
    }
    return b;
}

ChiBound chi_upper_bound(const SphereSpec& sphere, const CavitySpec& cavity,
                         const TrapSpec& trap) {
    const double g0 = coupling_g0(sphere, cavity, trap);
    const double kappa = cavity_kappa(sphere, cavity);
    const double gamma0_sc = scattering_localization(sphere, cavity, trap).gamma0_sc;
    ChiBound b;
    b.adiabatic_value = std::pow(kappa / g0, 0.25);
    b.scattering_value = 8.0 * g0 * g0 / std::sqrt(kappa * std::pow(gamma0_sc, 3));
    if (b.adiabatic_value <= b.scattering_value) {
        b.chi_max = b.adiabatic_value;
        b.branch = OptomechBranch::adiabatic;
    } else {
        b.chi_max = b.scattering_value;
        b.branch = OptomechBranch::scattering;
    }
    return b;
}

OptomechBounds optomech_bounds(const SphereSpec& sphere, const CavitySpec& cavity,
                               const TrapSpec& trap) {
    OptomechBounds out;
    out.g0 = coupling_g0(sphere, cavity, trap);
    out.kappa = cavity_kappa(sphere, cavity);
    const auto sc = scattering_localization(sphere, cavity, trap);
    out.lambda0_sc = sc.lambda0_sc;
    out.gamma0_sc = sc.gamma0_sc;
    const auto t1 = t1_bound(sphere, cavity, trap);
    out.t1_om = t1.t1_om;
    out.t1_branch = t1.branch;
    const auto chi = chi_upper_bound(sphere, cavity, trap);
    out.chi_max = chi.chi_max;
    out.chi_branch = chi.branch;
    return out;
}

bool pulsed_regime_check(const TrapSpec& trap, double T_pulse, double threshold) {
    if (!(T_pulse > 0.0)) throw DomainError("pulsed_regime_check: T must be positive");
    return (2.0 * trap.nbar + 1.0) * trap.omega * T_pulse / 4.0 < threshold;
}

}  // namespace merid
