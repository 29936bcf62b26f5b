#include "merid/localization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "merid/errors.hpp"
#include "merid/quadrature.hpp"
#include "merid/special.hpp"

namespace merid {

LocalizationModel LocalizationModel::saturating(double gamma, double a, std::string label) {
    if (!(gamma > 0.0)) throw DomainError("saturating model needs gamma > 0");
    if (!(a > 0.0)) throw DomainError("saturating model needs a > 0");
    LocalizationModel m;
    m.kind_ = LocalizationKind::saturating;
    m.gamma_ = gamma;
    m.a_ = a;
    m.lambda_ = gamma / (4.0 * a * a);
    m.label_ = std::move(label);
    return m;
}

LocalizationModel LocalizationModel::quadratic(double lambda, std::string label) {
    if (lambda < 0.0) throw DomainError("localization parameter must be non-negative");
    LocalizationModel m;
    m.kind_ = LocalizationKind::pure_quadratic;
    m.gamma_ = 0.0;
    m.a_ = std::numeric_limits<double>::infinity();
    m.lambda_ = lambda;
    m.label_ = std::move(label);
    return m;
}

double LocalizationModel::rate_at(double x) const {
    if (kind_ == LocalizationKind::pure_quadratic) return lambda_ * x * x;
    const double z = x / (2.0 * a_);
    return gamma_ * (-std::expm1(-z * z));
}

double CompositeModel::lambda_total() const {
    double sum = 0.0;
    for (const auto& c : components) sum += c.lambda();
    return sum;
}

double CompositeModel::lambda_pure_quadratic() const {
    double sum = 0.0;
    for (const auto& c : components)
        if (c.kind() == LocalizationKind::pure_quadratic) sum += c.lambda();
    return sum;
}

double CompositeModel::lambda_quadratic_at(double d) const {
    double sum = 0.0;
    for (const auto& c : components) {
        if (c.kind() == LocalizationKind::pure_quadratic || d < 2.0 * c.a()) sum += c.lambda();
    }
    return sum;
}

double CompositeModel::gamma_saturated_at(double d) const {
    double sum = 0.0;
    for (const auto& c : components) {
        if (c.kind() == LocalizationKind::saturating && d >= 2.0 * c.a()) sum += c.gamma();
    }
    return sum;
}

double CompositeModel::gamma_saturating_total() const {
    double sum = 0.0;
    for (const auto& c : components)
        if (c.kind() == LocalizationKind::saturating) sum += c.gamma();
    return sum;
}

namespace {

// log F(p,x,t) = gamma Int exp(...) - gamma t = -Int Gamma(x - p tau/m) dtau.
// Integrating the rate deficit directly (expm1 inside rate_at) keeps the
// exponent accurate when gamma t is huge but the deficit is tiny.
double log_kernel_factor(const LocalizationModel& model, double p, double x, double t,
                         double mass) {
    if (t < 0.0) throw DomainError("kernel_factor: t must be non-negative");
    if (!(mass > 0.0)) throw DomainError("kernel_factor: mass must be positive");
    if (t == 0.0) return 0.0;

    if (model.kind() == LocalizationKind::pure_quadratic) {
        // Int_0^t (x - p tau/m)^2 dtau in closed form.
        const double integral = x * x * t - x * p * t * t / mass
                                + p * p * t * t * t / (3.0 * mass * mass);
        return -model.lambda() * integral;
    }

    if (model.gamma() == 0.0) return 0.0;

    auto integrand = [&](double tau) { return model.rate_at(x - p * tau / mass); };
    // The rate dips to zero in a trough of width 2 a m / |p| around the
    // kernel-argument zero crossing; presplit there so adaptive bisection
    // cannot step over it.
    std::vector<double> knots;
    if (p != 0.0) {
        const double tau_star = x * mass / p;
        const double w = 2.0 * model.a() * mass / std::fabs(p);
        knots = {tau_star - 8.0 * w, tau_star - w, tau_star, tau_star + w, tau_star + 8.0 * w};
        std::sort(knots.begin(), knots.end());
    }
    const double scale = std::max(1.0, std::min(model.gamma() * t, 1e3));
    const double integral = integrate(integrand, 0.0, t, 1e-10 * scale, knots);
    return -std::max(integral, 0.0);
}

}  // namespace

double kernel_factor(const LocalizationModel& model, double p, double x, double t, double mass) {
    return std::exp(log_kernel_factor(model, p, x, t, mass));
}

double kernel_factor(const CompositeModel& models, double p, double x, double t, double mass) {
    double log_f = 0.0;
    for (const auto& c : models.components) log_f += log_kernel_factor(c, p, x, t, mass);
    return std::exp(log_f);
}

namespace {

// log of the unnormalized correlation integral over p. The Gaussian factor
// exp(-X_s p^2 / 2hbar^2 + S_s x p / 2hbar^2) is completed to a square and
// the -P_s x^2 / 2hbar^2 prefactor is returned separately in log space so
// ratios stay finite far outside the coherence length.
template <class Kernel>
double log_correlation(const Kernel& kern, const GaussianState& s, double x) {
    const double h2 = consts::hbar * consts::hbar;
    const double p_center = s.xp_sym * x / (2.0 * s.xx);
    const double p_width = consts::hbar / std::sqrt(s.xx);
    const double half_span = std::sqrt(74.0) * p_width;  // Gaussian factor < 1e-16 outside

    auto integrand = [&](double p) {
        const double dp = p - p_center;
        return kern(p) * std::exp(-s.xx * dp * dp / (2.0 * h2));
    };
    const double integral =
        integrate(integrand, p_center - half_span, p_center + half_span, 1e-10 * p_width);
    if (!(integral > 0.0)) throw NumericalError("coherence_ratio: correlation integral vanished");
    const double log_prefactor =
        -s.pp * x * x / (2.0 * h2) + s.xx * p_center * p_center / (2.0 * h2);
    return log_prefactor + std::log(integral);
}

}  // namespace

double coherence_ratio(const LocalizationModel& model, const GaussianState& s, double x) {
    if (x < 0.0) throw DomainError("coherence_ratio: x must be non-negative");
    if (x == 0.0) return 1.0;
    auto kern = [&](double p) { return kernel_factor(model, p, x, s.t, s.mass); };
    auto kern0 = [&](double p) { return kernel_factor(model, p, 0.0, s.t, s.mass); };
    return std::exp(log_correlation(kern, s, x) - log_correlation(kern0, s, 0.0));
}

double coherence_ratio(const CompositeModel& models, const GaussianState& s, double x) {
    if (x < 0.0) throw DomainError("coherence_ratio: x must be non-negative");
    if (x == 0.0) return 1.0;
    auto kern = [&](double p) { return kernel_factor(models, p, x, s.t, s.mass); };
    auto kern0 = [&](double p) { return kernel_factor(models, p, 0.0, s.t, s.mass); };
    return std::exp(log_correlation(kern, s, x) - log_correlation(kern0, s, 0.0));
}

double visibility_exponent(const LocalizationModel& model, double d) {
    if (!(d > 0.0)) throw DomainError("visibility_exponent: d must be positive");
    if (model.kind() == LocalizationKind::pure_quadratic) {
        return model.lambda() * d * d / 3.0;
    }
    const double z = d / (2.0 * model.a());
    if (z < 1e-3) {
        // series of 1 - sqrt(pi)/(2z) erf(z): z^2/3 - z^4/10 + z^6/42
        const double z2 = z * z;
        return model.gamma() * z2 * (1.0 / 3.0 - z2 / 10.0 + z2 * z2 / 42.0);
    }
    const double root_pi = std::sqrt(consts::pi);
    return model.gamma() * (1.0 - root_pi * (model.a() / d) * merid::erf(z));
}

double visibility_exponent(const CompositeModel& models, double d) {
    double sum = 0.0;
    for (const auto& c : models.components) sum += visibility_exponent(c, d);
    return sum;
}

double visibility(double theta, double t2) {
    if (theta < 0.0 || t2 < 0.0) throw DomainError("visibility: arguments must be non-negative");
    return std::exp(-theta * t2);
}

}  // namespace merid
