#pragma once

#include "merid/constants.hpp"
#include "merid/localization.hpp"

namespace merid {

/// Blackbody localization parameter split by channel (scattering at T_env,
/// emission at T_internal, absorption at T_env), all in m^-2 s^-1.
struct BlackbodyBreakdown {
    double lambda_sc = 0.0;
    double lambda_emit = 0.0;
    double lambda_abs = 0.0;
    double total = 0.0;
};

/// Thermal de Broglie wavelength of the gas, 2 pi hbar / sqrt(2 pi m_a k_b T_e).
double air_thermal_wavelength(const EnvironmentSpec& env);

/// rms gas speed sqrt(3 k_b T_e / m_a). This convention makes the
/// localization parameter, the saturation rate, and the wavelength relations
/// a = lambda_th/2, gamma = lambda_th^2 Lambda mutually exact.
double air_mean_velocity(const EnvironmentSpec& env);

/// Long-wavelength localization parameter of gas scattering,
/// 8 sqrt(2 pi) m_a vbar P R^2 / (3 sqrt(3) hbar^2).
double air_localization_parameter(const EnvironmentSpec& env, const SphereSpec& sphere);

/// Saturated scattering rate 16 pi sqrt(2 pi) P R^2 / (sqrt(3) vbar m_a).
double air_saturation_rate(const EnvironmentSpec& env, const SphereSpec& sphere);

/// Saturating model with a = lambda_th/2 and gamma = gamma_air; asserts the
/// gamma = lambda_th^2 Lambda identity to 1e-6 relative.
LocalizationModel air_model(const EnvironmentSpec& env, const SphereSpec& sphere);

/// Thermal wavelength of blackbody photons, pi^(2/3) hbar c / (k_b T_e).
double bb_thermal_wavelength(double T_env);

BlackbodyBreakdown blackbody_localization(const SphereSpec& sphere, const EnvironmentSpec& env);

/// Pure-quadratic model by default (protocol superpositions stay far below
/// the millimeter photon wavelength); pass saturating=true to attach the
/// a = lambda_bb/2 scale instead.
LocalizationModel blackbody_model(const SphereSpec& sphere, const EnvironmentSpec& env,
                                  bool saturating = false);

/// Air + blackbody, the two unavoidable sources.
CompositeModel standard_model(const EnvironmentSpec& env, const SphereSpec& sphere);

}  // namespace merid
