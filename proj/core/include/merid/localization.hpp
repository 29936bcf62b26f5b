#pragma once

#include <string>
#include <vector>

#include "merid/gaussian.hpp"

namespace merid {

enum class LocalizationKind { saturating, pure_quadratic };

/// One position-localization decoherence source. Saturating sources carry a
/// rate gamma and a distance a with Lambda = gamma / (4 a^2); pure-quadratic
/// sources (a -> infinity at fixed Lambda) store Lambda directly and report
/// gamma = 0, a = inf as limit markers.
class LocalizationModel {
public:
    static LocalizationModel saturating(double gamma, double a, std::string source_label);
    static LocalizationModel quadratic(double lambda, std::string source_label);

    LocalizationKind kind() const { return kind_; }
    double gamma() const { return gamma_; }
    double a() const { return a_; }
    double lambda() const { return lambda_; }
    const std::string& source_label() const { return label_; }

    /// Decoherence rate Gamma(x): gamma (1 - exp[-x^2/(4a^2)]) for a
    /// saturating source, Lambda x^2 for a pure-quadratic one.
    double rate_at(double x) const;

private:
    LocalizationModel() = default;
    LocalizationKind kind_ = LocalizationKind::pure_quadratic;
    double gamma_ = 0.0;
    double a_ = 0.0;
    double lambda_ = 0.0;
    std::string label_;
};

/// Several independent sources acting together; solution kernels multiply,
/// so Lambda values add while each source keeps its own saturation scale.
struct CompositeModel {
    std::vector<LocalizationModel> components;

    CompositeModel() = default;
    explicit CompositeModel(std::vector<LocalizationModel> comps) : components(std::move(comps)) {}

    double lambda_total() const;
    /// Sum of Lambda over pure-quadratic components only.
    double lambda_pure_quadratic() const;
    /// Sum of Lambda over components still quadratic at separation d
    /// (pure-quadratic always; saturating ones only while d < 2a).
    double lambda_quadratic_at(double d) const;
    /// Sum of gamma over saturating components already saturated at d.
    double gamma_saturated_at(double d) const;
    /// Sum of gamma over all saturating components.
    double gamma_saturating_total() const;
};

/// Decoherence factor of the free-flight solution kernel,
/// F(p, x, t) = exp[-gamma t] exp[gamma Int_0^t exp(-((x - p tau / m) / 2a)^2) dtau].
/// The tau-integral is evaluated by adaptive quadrature (1e-10 absolute).
double kernel_factor(const LocalizationModel& model, double p, double x, double t, double mass);
double kernel_factor(const CompositeModel& models, double p, double x, double t, double mass);

/// Normalized position correlation C(x,t)/C(0,t) for a Gaussian state.
/// `coherent` must be the state evolved WITHOUT decoherence to time
/// coherent.t; the kernel supplies the decoherence of the model.
double coherence_ratio(const LocalizationModel& model, const GaussianState& coherent, double x);
double coherence_ratio(const CompositeModel& models, const GaussianState& coherent, double x);

/// Fringe-attenuation exponent Theta(d): gamma - gamma sqrt(pi) (a/d) erf(d/2a)
/// for a saturating source, Lambda d^2 / 3 for a pure-quadratic one.
double visibility_exponent(const LocalizationModel& model, double d);
/// Independent sources attenuate multiplicatively, so exponents add.
double visibility_exponent(const CompositeModel& models, double d);

/// V = exp(-theta t2).
double visibility(double theta, double t2);

}  // namespace merid
