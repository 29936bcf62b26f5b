#pragma once

#include <string>

#include "merid/constants.hpp"

namespace merid {

/// Short high-finesse cavity used for the squared-position readout.
struct CavitySpec {
    double finesse;
    double length;       // m
    double wavelength;   // m, drive on cavity resonance
    double waist;        // m

    CavitySpec(double finesse, double length, double wavelength, double waist);

    /// pi W^2 L / 4
    double mode_volume() const;
    double k_c() const;   // 2 pi / wavelength
};

enum class OptomechBranch { adiabatic, scattering };

std::string to_string(OptomechBranch b);

/// Everything the readout implementation imposes on the protocol.
struct OptomechBounds {
    double g0 = 0.0;          // bare quadratic coupling, 1/s
    double kappa = 0.0;       // cavity amplitude decay, 1/s
    double lambda0_sc = 0.0;  // light-scattering localization per photon, m^-2 s^-1
    double gamma0_sc = 0.0;   // lambda0_sc x0^2, 1/s
    double t1_om = 0.0;       // upper bound on the expansion time, s
    OptomechBranch t1_branch = OptomechBranch::adiabatic;
    double chi_max = 0.0;
    OptomechBranch chi_branch = OptomechBranch::adiabatic;
};

/// Quadratic coupling at the node, g0 = eps_c x0^2 k_c^3 c V / (4 V_c) with
/// eps_c = 3 Re[(eps_r - 1)/(eps_r + 2)].
double coupling_g0(const SphereSpec& sphere, const CavitySpec& cavity, const TrapSpec& trap);

/// Finesse decay pi c / (F L) plus the light-scattering contribution
/// c eps_c^2 V^2 k_c^4 / (16 pi V_c).
double cavity_kappa(const SphereSpec& sphere, const CavitySpec& cavity);

/// Photon number that cancels the readout phase against the time-of-flight
/// phase: exact form omega t1 kappa / (8 g0 (1 + t1^2 omega^2)).
double photon_number(double t1, const TrapSpec& trap, double g0, double kappa);
/// Large-t1 form kappa / (8 g0 t1 omega), within 1% of the exact one for
/// t1 omega >= 10.
double photon_number_approx(double t1, const TrapSpec& trap, double g0, double kappa);

/// Phase-compensated measurement strength chi = (t1 omega)^(3/2) sqrt(g0/kappa).
double measurement_strength(double t1, const TrapSpec& trap, double g0, double kappa);

struct ScatteringLocalization {
    double lambda0_sc;   // m^-2 s^-1 per intracavity photon
    double gamma0_sc;    // lambda0_sc * x0^2, 1/s
};

/// Rayleigh-scattering localization of the readout light,
/// Lambda0 = eps_c^2 c V^2 k_c^6 / (6 pi V_c).
ScatteringLocalization scattering_localization(const SphereSpec& sphere,
                                               const CavitySpec& cavity, const TrapSpec& trap);

struct T1Bound {
    double t1_om;   // s
    double adiabatic_value;    // sqrt(kappa/g0) / omega
    double scattering_value;   // 4 g0 / (Gamma0_sc omega)
    OptomechBranch branch;
};

/// t1 << min{ sqrt(kappa/g0), 4 g0 / Gamma0_sc } / omega.
T1Bound t1_bound(const SphereSpec& sphere, const CavitySpec& cavity, const TrapSpec& trap);

struct ChiBound {
    double chi_max;
    double adiabatic_value;    // (kappa/g0)^(1/4)
    double scattering_value;   // 8 g0^2 / sqrt(kappa Gamma0_sc^3)
    OptomechBranch branch;
};

/// chi << min{ (kappa/g0)^(1/4), 8 g0^2 / sqrt(kappa Gamma0_sc^3) }.
ChiBound chi_upper_bound(const SphereSpec& sphere, const CavitySpec& cavity,
                         const TrapSpec& trap);

/// All readout quantities for one sphere/cavity/trap combination.
OptomechBounds optomech_bounds(const SphereSpec& sphere, const CavitySpec& cavity,
                               const TrapSpec& trap);

/// Pulsed regime requires (2 nbar + 1) omega T / 4 below the threshold (0.1).
bool pulsed_regime_check(const TrapSpec& trap, double T_pulse, double threshold = 0.1);

}  // namespace merid
