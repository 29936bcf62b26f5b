#pragma once

#include <complex>

namespace merid {

/// CODATA 2018 values. Everything downstream computes in SI; Torr, nm and
/// friends are converted at the input boundary only.
namespace consts {
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double k_b = 1.380649e-23;           // J/K
inline constexpr double c = 299792458.0;              // m/s
inline constexpr double G = 6.67430e-11;              // m^3 kg^-1 s^-2
inline constexpr double amu = 1.66053906660e-27;      // kg
inline constexpr double m_nucleon = amu;              // kg, nucleon mass taken as 1 amu
inline constexpr double m_planck = 2.176434e-8;       // kg
inline constexpr double l_planck = 1.616255e-35;      // m
inline constexpr double zeta9 = 1.002008392826082;    // Riemann zeta(9)
inline constexpr double torr = 133.322368;            // Pa per Torr
}  // namespace consts

struct PhysicalConstants {
    double hbar = consts::hbar;
    double k_b = consts::k_b;
    double c = consts::c;
    double G = consts::G;
    double amu = consts::amu;
    double m_nucleon = consts::m_nucleon;
    double m_planck = consts::m_planck;
    double l_planck = consts::l_planck;

    /// Throws DomainError unless all entries are positive and the Planck
    /// length is consistent with sqrt(G hbar / c^3) to 1e-6 relative.
    void validate() const;
};

double torr_to_pascal(double p_torr);
double pascal_to_torr(double p_pa);

/// Geometry and material of the levitated sphere.
struct SphereSpec {
    double radius;                      // m
    double density;                     // kg/m^3
    std::complex<double> eps_optical;   // relative dielectric constant at the laser wavelength
    std::complex<double> eps_bb;        // average dielectric constant over the blackbody spectrum
    double T_internal;                  // bulk temperature, K

    SphereSpec(double radius, double density, std::complex<double> eps_optical,
               std::complex<double> eps_bb, double T_internal);

    double volume() const;
};

double sphere_mass(const SphereSpec& s);

/// Residual-gas environment around the trap.
struct EnvironmentSpec {
    double pressure;   // Pa
    double T_env;      // K
    double gas_mass;   // kg

    EnvironmentSpec(double pressure_pa, double T_env_k, double gas_mass_kg);

    static EnvironmentSpec from_torr(double pressure_torr, double T_env_k, double gas_mass_kg);
};

struct TrapSpec {
    double omega;   // rad/s
    double nbar;    // mean phonon occupation

    TrapSpec(double omega, double nbar);
};

/// The experimental defaults used throughout: fused-silica sphere in a
/// 100 kHz trap read out by a short fiber cavity.
struct DefaultParameterSet {
    double density = 2201.0;                            // kg/m^3
    std::complex<double> eps_optical{2.1, 1e-10};
    double omega = 2.0 * consts::pi * 100e3;            // rad/s
    double nbar = 0.1;
    double T_env = 4.5;                                 // K
    double gas_mass = 28.97 * consts::amu;              // kg
    std::complex<double> eps_bb{2.1, 0.57};
    double delta_x = 0.1e-9;                            // m, detector position resolution
    double finesse = 1.3e5;
    double cavity_length = 2e-6;                        // m
    double wavelength = 1064e-9;                        // m
    double waist = 1.5e-6;                              // m

    SphereSpec make_sphere(double radius_m, double T_internal_k) const;
    EnvironmentSpec make_environment(double pressure_pa) const;
    TrapSpec make_trap() const;

    bool operator==(const DefaultParameterSet&) const = default;
};

}  // namespace merid
