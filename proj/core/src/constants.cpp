#include "merid/constants.hpp"

#include <cmath>

#include "merid/errors.hpp"

namespace merid {

void PhysicalConstants::validate() const {
    const double entries[] = {hbar, k_b, c, G, amu, m_nucleon, m_planck, l_planck};
    for (double v : entries) {
        if (!(v > 0.0)) throw DomainError("physical constant must be positive");
    }
    const double lp = std::sqrt(G * hbar / (c * c * c));
    if (std::abs(lp - l_planck) > 1e-6 * l_planck) {
        throw DomainError("Planck length inconsistent with sqrt(G*hbar/c^3)");
    }
}

double torr_to_pascal(double p_torr) {
    if (p_torr < 0.0) throw DomainError("pressure must be non-negative");
    return p_torr * consts::torr;
}

double pascal_to_torr(double p_pa) {
    if (p_pa < 0.0) throw DomainError("pressure must be non-negative");
    return p_pa / consts::torr;
}

SphereSpec::SphereSpec(double radius_, double density_, std::complex<double> eps_optical_,
                       std::complex<double> eps_bb_, double T_internal_)
    : radius(radius_), density(density_), eps_optical(eps_optical_), eps_bb(eps_bb_),
      T_internal(T_internal_) {
    if (!(radius > 0.0)) throw DomainError("sphere radius must be positive");
    if (!(density > 0.0)) throw DomainError("sphere density must be positive");
    if (T_internal < 0.0) throw DomainError("bulk temperature must be non-negative");
    if (eps_optical.imag() < 0.0 || eps_bb.imag() < 0.0) {
        throw DomainError("Im(eps) must be non-negative for a passive medium");
    }
}

double SphereSpec::volume() const {
    return 4.0 / 3.0 * consts::pi * radius * radius * radius;
}

double sphere_mass(const SphereSpec& s) {
    return s.density * s.volume();
}

EnvironmentSpec::EnvironmentSpec(double pressure_pa, double T_env_k, double gas_mass_kg)
    : pressure(pressure_pa), T_env(T_env_k), gas_mass(gas_mass_kg) {
    if (pressure < 0.0) throw DomainError("pressure must be non-negative");
    if (!(T_env > 0.0)) throw DomainError("environment temperature must be positive");
    if (!(gas_mass > 0.0)) throw DomainError("gas particle mass must be positive");
}

EnvironmentSpec EnvironmentSpec::from_torr(double pressure_torr, double T_env_k,
                                           double gas_mass_kg) {
    return EnvironmentSpec(torr_to_pascal(pressure_torr), T_env_k, gas_mass_kg);
}

TrapSpec::TrapSpec(double omega_, double nbar_) : omega(omega_), nbar(nbar_) {
    if (!(omega > 0.0)) throw DomainError("trap frequency must be positive");
    if (nbar < 0.0) throw DomainError("mean occupation must be non-negative");
}

SphereSpec DefaultParameterSet::make_sphere(double radius_m, double T_internal_k) const {
    return SphereSpec(radius_m, density, eps_optical, eps_bb, T_internal_k);
}

EnvironmentSpec DefaultParameterSet::make_environment(double pressure_pa) const {
    return EnvironmentSpec(pressure_pa, T_env, gas_mass);
}

TrapSpec DefaultParameterSet::make_trap() const {
    return TrapSpec(omega, nbar);
}

}  // namespace merid
