#include "merid/collapse_models.hpp"

#include <cmath>

#include "merid/errors.hpp"

namespace merid {

using consts::c;
using consts::G;
using consts::hbar;
using consts::l_planck;
using consts::m_nucleon;
using consts::m_planck;

CslParams::CslParams(double gamma0_, double a_csl_) : gamma0(gamma0_), a_csl(a_csl_) {
    if (!(gamma0 > 0.0) || !(a_csl > 0.0)) {
        throw DomainError("CslParams: rate and distance must be positive");
    }
}

CslParams CslParams::grw() { return CslParams(1e-16, 100e-9); }

CslParams CslParams::grw_scaled(double multiplier) {
    if (!(multiplier > 0.0)) throw DomainError("CSL rate multiplier must be positive");
    return CslParams(1e-16 * multiplier, 100e-9);
}

double csl_shape_f(double x) {
    if (x < 0.0) throw DomainError("csl_shape_f: x must be non-negative");
    const double u = x * x;
    if (x < 0.1) {
        return 1.0 + u * (-1.0 / 2.0 + u * (3.0 / 20.0 + u * (-1.0 / 30.0
                   + u * (1.0 / 168.0 - u / 1120.0))));
    }
    // 1 - 2/u + (1 + 2/u) e^-u == 2 + (1 + 2/u) expm1(-u); evaluated in long
    // double since the bracket is ~u^2/6 against terms of order 2/u.
    const long double ul = static_cast<long double>(u);
    const long double bracket = 2.0L + (1.0L + 2.0L / ul) * std::expm1(-ul);
    return static_cast<double>(6.0L / (ul * ul) * bracket);
}

LocalizationModel csl_model(const SphereSpec& sphere, const CslParams& params) {
    const double m = sphere_mass(sphere);
    const double n2 = (m / m_nucleon) * (m / m_nucleon);
    const double gamma = n2 * params.gamma0 * csl_shape_f(sphere.radius / params.a_csl);
    return LocalizationModel::saturating(gamma, params.a_csl, "csl");
}

LocalizationModel qg_model(const SphereSpec& sphere) {
    const double m = sphere_mass(sphere);
    const double m0sq = m_nucleon * m_nucleon;
    const double lambda = std::pow(c, 4) * m * m * m0sq * m0sq
                          / (std::pow(hbar, 3) * std::pow(m_planck, 3));
    const double a = hbar * m_planck / (2.0 * c * m0sq);
    return LocalizationModel::saturating(4.0 * a * a * lambda, a, "qg");
}

LocalizationModel dp_model(const SphereSpec& sphere) {
    const double m = sphere_mass(sphere);
    const double R = sphere.radius;
    const double gamma = 6.0 * G * m * m / (5.0 * R * hbar);
    const double a = std::sqrt(3.0 / 5.0) * R;
    return LocalizationModel::saturating(gamma, a, "dp");
}

LocalizationModel dp_microscopic_model(const SphereSpec& sphere, double r0) {
    if (!(r0 > 0.0)) throw DomainError("dp_microscopic_model: r0 must be positive");
    if (r0 > sphere.radius) throw DomainError("dp_microscopic_model: r0 must not exceed R");
    const double m = sphere_mass(sphere);
    const double R = sphere.radius;
    const double lambda_dp = G * m * m / (2.0 * std::pow(R, 3) * hbar);
    const double lambda = std::pow(R / r0, 3) * lambda_dp;
    const double a = r0 / 2.0;
    return LocalizationModel::saturating(4.0 * a * a * lambda, a, "dp-micro");
}

double k_coherence_cell(const SphereSpec& sphere) {
    const double l_c = hbar / (sphere_mass(sphere) * c);
    return std::pow(sphere.radius / l_planck, 2.0 / 3.0) * l_c;
}

double k_coherence_cell_point(const SphereSpec& sphere) {
    const double l_c = hbar / (sphere_mass(sphere) * c);
    return (l_c / l_planck) * (l_c / l_planck) * l_c;
}

double k_crossover_radius(const SphereSpec& sphere) {
    const double l_c = hbar / (sphere_mass(sphere) * c);
    return std::pow(l_c, 3) / (l_planck * l_planck);
}

LocalizationModel k_model(const SphereSpec& sphere) {
    const double m = sphere_mass(sphere);
    const double a_c = k_coherence_cell(sphere);
    const double lambda = hbar / (8.0 * m * std::pow(a_c, 4));
    return LocalizationModel::quadratic(lambda, "k");
}

LocalizationModel model_for(const CollapseModelId& id, const SphereSpec& sphere) {
    return std::visit(
        [&](const auto& v) -> LocalizationModel {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, CslId>) return csl_model(sphere, v.params);
            else if constexpr (std::is_same_v<T, QgId>) return qg_model(sphere);
            else if constexpr (std::is_same_v<T, DpId>) return dp_model(sphere);
            else if constexpr (std::is_same_v<T, DpMicroId>)
                return dp_microscopic_model(sphere, v.r0);
            else return k_model(sphere);
        },
        id);
}

CollapseModelId parse_collapse_model(const std::string& text) {
    auto parse_value = [&](const std::string& key) -> double {
        const std::string prefix = key + "=";
        const auto pos = text.find(prefix);
        if (pos == std::string::npos) {
            throw DomainError("collapse model '" + text + "': expected " + prefix + "<value>");
        }
        try {
            return std::stod(text.substr(pos + prefix.size()));
        } catch (const std::exception&) {
            throw DomainError("collapse model '" + text + "': bad numeric value");
        }
    };

    if (text == "csl") return CslId{};
    if (text.rfind("csl:", 0) == 0) return CslId{CslParams::grw_scaled(parse_value("adler"))};
    if (text == "qg") return QgId{};
    if (text == "dp") return DpId{};
    if (text.rfind("dp-micro:", 0) == 0) {
        const double r0_nm = parse_value("r0");
        if (!(r0_nm > 0.0)) throw DomainError("dp-micro: r0 must be positive");
        return DpMicroId{r0_nm * 1e-9};
    }
    if (text == "k") return KId{};
    throw DomainError("unknown collapse model '" + text +
                      "'; expected csl | csl:adler=<mult> | qg | dp | dp-micro:r0=<nm> | k");
}

std::string collapse_model_name(const CollapseModelId& id) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, CslId>) return "csl";
            else if constexpr (std::is_same_v<T, QgId>) return "qg";
            else if constexpr (std::is_same_v<T, DpId>) return "dp";
            else if constexpr (std::is_same_v<T, DpMicroId>) return "dp-micro";
            else return "k";
        },
        id);
}

}  // namespace merid
