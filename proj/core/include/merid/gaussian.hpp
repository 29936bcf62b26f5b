#pragma once

#include <optional>

#include "merid/constants.hpp"

namespace merid {

/// Second-moment description of the center-of-mass state. Positions in m,
/// momenta in kg m/s; t is the elapsed free-flight time.
struct GaussianState {
    double mass;     // kg
    double xx;       // <x^2>, m^2
    double pp;       // <p^2>, kg^2 m^2 / s^2
    double xp_sym;   // <{x,p}_+>, kg m^2 / s
    double t;        // s

    GaussianState(double mass, double xx, double pp, double xp_sym, double t);

    /// 4<x^2><p^2> - <{x,p}_+>^2, >= hbar^2 for any physical state.
    double heisenberg_lhs() const;
};

struct ExpansionRecord {
    double sigma2;    // wave-packet variance after the expansion, m^2
    double phi_tof;   // quadratic phase accumulated in free flight, rad
    double t1;        // expansion time, s
};

/// Ground-state size sqrt(hbar / (2 m omega)).
double zero_point_motion(double mass, double omega);

/// Thermal trap state: <x^2> = (2 nbar + 1) x0^2, <p^2> = (2 nbar + 1) hbar^2 / (4 x0^2),
/// zero symmetrized covariance.
GaussianState thermal_initial_state(double mass, double omega, double nbar);

/// Coherent free expansion of the pure packet: sigma^2 = x0^2 (1 + t1^2 omega^2)
/// and phi_tof = omega t1 / 4.
ExpansionRecord expand_free_coherent(double mass, double omega, double t1);

/// Free flight for a time t with a quadratic position-localization source of
/// strength lambda (m^-2 s^-1). The coherent part is the exact affine
/// evolution of the second moments; the decoherence adds the diffusive
/// t, t^2 and t^3 terms, so composing two steps equals one long step.
GaussianState evolve_with_decoherence(const GaussianState& s, double t, double lambda);

/// Coherence length xi with xi^2 = 8 hbar^2 <x^2> / (4 <x^2><p^2> - <{x,p}_+>^2).
double coherence_length(const GaussianState& s);

/// Decoherence-free counterpart xi_s = sqrt(8 sigma^2(t) / (2 nbar + 1)).
double coherence_length_schrodinger(double sigma2, double nbar);

/// Time of the coherence-length maximum, [3 m (2 nbar + 1) / (2 lambda hbar omega)]^(1/3).
/// nullopt when lambda == 0 (xi grows monotonically, no maximum).
std::optional<double> t_max_coherence(double mass, double nbar, double omega, double lambda);

/// Peak coherence length sqrt(2) [2 hbar omega / (3 m lambda^2 (2 nbar + 1))]^(1/6).
/// nullopt when lambda == 0 (unbounded).
std::optional<double> xi_max(double mass, double nbar, double omega, double lambda);

}  // namespace merid
