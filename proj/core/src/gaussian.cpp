#include "merid/gaussian.hpp"

#include <cmath>

#include "merid/errors.hpp"

namespace merid {

namespace {
constexpr double kHeisenbergSlack = 1e-9;
}

GaussianState::GaussianState(double mass_, double xx_, double pp_, double xp_sym_, double t_)
    : mass(mass_), xx(xx_), pp(pp_), xp_sym(xp_sym_), t(t_) {
    if (!(mass > 0.0)) throw DomainError("state mass must be positive");
    if (!(xx > 0.0) || !(pp > 0.0)) throw DomainError("second moments must be positive");
    const double h2 = consts::hbar * consts::hbar;
    if (heisenberg_lhs() < h2 * (1.0 - kHeisenbergSlack)) {
        throw DomainError("state violates the Heisenberg inequality");
    }
}

double GaussianState::heisenberg_lhs() const {
    return 4.0 * xx * pp - xp_sym * xp_sym;
}

double zero_point_motion(double mass, double omega) {
    if (!(mass > 0.0) || !(omega > 0.0)) {
        throw DomainError("zero_point_motion: mass and omega must be positive");
    }
    return std::sqrt(consts::hbar / (2.0 * mass * omega));
}

GaussianState thermal_initial_state(double mass, double omega, double nbar) {
    if (nbar < 0.0) throw DomainError("nbar must be non-negative");
    const double x0 = zero_point_motion(mass, omega);
    const double u = 2.0 * nbar + 1.0;
    const double xx = u * x0 * x0;
    const double pp = u * consts::hbar * consts::hbar / (4.0 * x0 * x0);
    return GaussianState(mass, xx, pp, 0.0, 0.0);
}

ExpansionRecord expand_free_coherent(double mass, double omega, double t1) {
    if (t1 < 0.0) throw DomainError("expansion time must be non-negative");
    const double x0 = zero_point_motion(mass, omega);
    ExpansionRecord rec;
    rec.sigma2 = x0 * x0 * (1.0 + t1 * t1 * omega * omega);
    rec.phi_tof = omega * t1 / 4.0;
    rec.t1 = t1;
    return rec;
}

GaussianState evolve_with_decoherence(const GaussianState& s, double t, double lambda) {
    if (t < 0.0) throw DomainError("evolution time must be non-negative");
    if (lambda < 0.0) throw DomainError("localization parameter must be non-negative");
    const double m = s.mass;
    const double h2 = consts::hbar * consts::hbar;
    const double xx = s.xx + s.pp * t * t / (m * m) + s.xp_sym * t / m
                      + 2.0 * lambda * h2 * t * t * t / (3.0 * m * m);
    const double pp = s.pp + 2.0 * lambda * h2 * t;
    const double xp = s.xp_sym + 2.0 * s.pp * t / m + 2.0 * lambda * h2 * t * t / m;
    return GaussianState(m, xx, pp, xp, s.t + t);
}

double coherence_length(const GaussianState& s) {
    const double denom = s.heisenberg_lhs();
    if (!(denom > 0.0)) throw DomainError("coherence_length: non-physical state");
    return std::sqrt(8.0 * consts::hbar * consts::hbar * s.xx / denom);
}

double coherence_length_schrodinger(double sigma2, double nbar) {
    if (!(sigma2 > 0.0)) throw DomainError("sigma^2 must be positive");
    return std::sqrt(8.0 * sigma2 / (2.0 * nbar + 1.0));
}

std::optional<double> t_max_coherence(double mass, double nbar, double omega, double lambda) {
    if (lambda < 0.0) throw DomainError("localization parameter must be non-negative");
    if (lambda == 0.0) return std::nullopt;
    const double u = 2.0 * nbar + 1.0;
    return std::cbrt(3.0 * mass * u / (2.0 * lambda * consts::hbar * omega));
}

std::optional<double> xi_max(double mass, double nbar, double omega, double lambda) {
    if (lambda < 0.0) throw DomainError("localization parameter must be non-negative");
    if (lambda == 0.0) return std::nullopt;
    const double u = 2.0 * nbar + 1.0;
    const double arg = 2.0 * consts::hbar * omega / (3.0 * mass * lambda * lambda * u);
    return std::sqrt(2.0) * std::pow(arg, 1.0 / 6.0);
}

}  // namespace merid
