#include "merid/standard_decoherence.hpp"

#include <cmath>

#include "merid/errors.hpp"

namespace merid {

using consts::c;
using consts::hbar;
using consts::k_b;
using consts::pi;

double air_thermal_wavelength(const EnvironmentSpec& env) {
    return 2.0 * pi * hbar / std::sqrt(2.0 * pi * env.gas_mass * k_b * env.T_env);
}

double air_mean_velocity(const EnvironmentSpec& env) {
    return std::sqrt(3.0 * k_b * env.T_env / env.gas_mass);
}

double air_localization_parameter(const EnvironmentSpec& env, const SphereSpec& sphere) {
    const double vbar = air_mean_velocity(env);
    const double R2 = sphere.radius * sphere.radius;
    return 8.0 * std::sqrt(2.0 * pi) * env.gas_mass * vbar * env.pressure * R2
           / (3.0 * std::sqrt(3.0) * hbar * hbar);
}

double air_saturation_rate(const EnvironmentSpec& env, const SphereSpec& sphere) {
    const double vbar = air_mean_velocity(env);
    const double R2 = sphere.radius * sphere.radius;
    return 16.0 * pi * std::sqrt(2.0 * pi) * env.pressure * R2
           / (std::sqrt(3.0) * vbar * env.gas_mass);
}

LocalizationModel air_model(const EnvironmentSpec& env, const SphereSpec& sphere) {
    const double lambda_th = air_thermal_wavelength(env);
    const double gamma = air_saturation_rate(env, sphere);
    const double lambda = air_localization_parameter(env, sphere);
    if (gamma > 0.0) {
        const double recon = lambda_th * lambda_th * lambda;
        if (std::abs(recon - gamma) > 1e-6 * gamma) {
            throw NumericalError("air model: gamma = lambda_th^2 Lambda identity broken");
        }
    }
    if (gamma == 0.0) {
        // P = 0: no gas decoherence at all.
        return LocalizationModel::quadratic(0.0, "air");
    }
    return LocalizationModel::saturating(gamma, lambda_th / 2.0, "air");
}

double bb_thermal_wavelength(double T_env) {
    if (!(T_env > 0.0)) throw DomainError("bb_thermal_wavelength: T must be positive");
    return std::pow(pi, 2.0 / 3.0) * hbar * c / (k_b * T_env);
}

namespace {

double clausius_mossotti_re(std::complex<double> eps) {
    return ((eps - 1.0) / (eps + 2.0)).real();
}

double clausius_mossotti_im(std::complex<double> eps) {
    return ((eps - 1.0) / (eps + 2.0)).imag();
}

double pow6(double x) {
    const double x2 = x * x;
    return x2 * x2 * x2;
}

// Emission/absorption channel at temperature T: 16 pi^5 c R^3 / 189 (k_b T / hbar c)^6 Im[cm].
double bb_channel(double R, double T, double im_cm) {
    const double kT_over_hc = k_b * T / (hbar * c);
    return 16.0 * std::pow(pi, 5) * c * R * R * R / 189.0 * pow6(kT_over_hc) * im_cm;
}

}  // namespace

BlackbodyBreakdown blackbody_localization(const SphereSpec& sphere, const EnvironmentSpec& env) {
    const double im_cm = clausius_mossotti_im(sphere.eps_bb);
    if (im_cm < 0.0) throw DomainError("blackbody: Im[(eps-1)/(eps+2)] must be non-negative");
    const double re_cm = clausius_mossotti_re(sphere.eps_bb);

    BlackbodyBreakdown bb;
    const double R = sphere.radius;
    const double kTe_over_hc = k_b * env.T_env / (hbar * c);
    const double fact8_8 = 40320.0 * 8.0;  // 8! * 8
    bb.lambda_sc = fact8_8 * consts::zeta9 * c * std::pow(R, 6) / (9.0 * pi)
                   * std::pow(kTe_over_hc, 9) * re_cm * re_cm;
    bb.lambda_emit = sphere.T_internal > 0.0 ? bb_channel(R, sphere.T_internal, im_cm) : 0.0;
    bb.lambda_abs = bb_channel(R, env.T_env, im_cm);
    bb.total = bb.lambda_sc + bb.lambda_emit + bb.lambda_abs;
    return bb;
}

LocalizationModel blackbody_model(const SphereSpec& sphere, const EnvironmentSpec& env,
                                  bool saturating) {
    const BlackbodyBreakdown bb = blackbody_localization(sphere, env);
    if (saturating && bb.total > 0.0) {
        const double a = bb_thermal_wavelength(env.T_env) / 2.0;
        return LocalizationModel::saturating(4.0 * a * a * bb.total, a, "blackbody");
    }
    return LocalizationModel::quadratic(bb.total, "blackbody");
}

CompositeModel standard_model(const EnvironmentSpec& env, const SphereSpec& sphere) {
    return CompositeModel({air_model(env, sphere), blackbody_model(sphere, env)});
}

}  // namespace merid
