#include "merid/interference.hpp"

#include <algorithm>
#include <cmath>

#include "merid/errors.hpp"
#include "merid/fft.hpp"
#include "merid/gaussian.hpp"

namespace merid {

using consts::hbar;
using consts::pi;

namespace {

constexpr double kNormTol = 1e-8;
constexpr std::size_t kMaxGridSize = std::size_t{1} << 22;

double signed_frequency_index(std::size_t j, std::size_t n) {
    return j < n / 2 ? static_cast<double>(j)
                     : static_cast<double>(j) - static_cast<double>(n);
}

void check_norm(const PatternGrid& g, const char* where) {
    if (std::fabs(g.norm() - 1.0) > kNormTol) {
        throw NumericalError(std::string(where) + ": norm drifted to "
                             + std::to_string(g.norm()));
    }
}

}  // namespace

double PatternGrid::norm() const {
    double sum = 0.0;
    if (is_probability) {
        for (const auto& v : amp) sum += v.real();
    } else {
        for (const auto& v : amp) sum += std::norm(v);
    }
    return sum * dx;
}

std::vector<double> PatternGrid::values() const {
    std::vector<double> out(amp.size());
    for (std::size_t i = 0; i < amp.size(); ++i) {
        out[i] = is_probability ? amp[i].real() : std::norm(amp[i]);
    }
    return out;
}

double PatternGrid::mean() const {
    const auto v = values();
    double m = 0.0, w = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        m += v[i] * axis(i);
        w += v[i];
    }
    return m / w;
}

double PatternGrid::variance() const {
    const auto v = values();
    const double mu = mean();
    double s = 0.0, w = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double dxi = axis(i) - mu;
        s += v[i] * dxi * dxi;
        w += v[i];
    }
    return s / w;
}

GridSpec recommend_grid(double sigma, double d, double chi, double phi_total, double mass,
                        double t2) {
    if (!(sigma > 0.0) || !(d > 0.0) || !(chi > 0.0) || !(mass > 0.0) || t2 < 0.0) {
        throw DomainError("recommend_grid: bad arguments");
    }
    const double sigma_d = sigma * sigma / (2.0 * chi * d);
    double step = sigma_d / 8.0;
    if (t2 > 0.0) step = std::min(step, fringe_spacing(mass, d, t2) / 8.0);

    // Envelope after t2: slit packets of width sigma_d spread ballistically;
    // the quadratic phase adds momentum proportional to position.
    const double spread = t2 > 0.0 ? hbar * t2 / (2.0 * mass * sigma_d) : 0.0;
    const double w_final = std::sqrt(sigma_d * sigma_d + spread * spread);
    const double x_edge = d / 2.0 + 5.0 * sigma_d;
    const double chirp_drift =
        2.0 * hbar * std::fabs(phi_total) * x_edge / (sigma * sigma) * t2 / mass;
    const double envelope = d / 2.0 + 5.0 * w_final + chirp_drift;

    const double span = 8.0 * envelope;
    std::size_t n = next_power_of_two(static_cast<std::size_t>(std::ceil(span / step)));
    if (n > kMaxGridSize) {
        throw NumericalError("recommend_grid: " + std::to_string(n)
                             + " bins exceed the grid budget");
    }
    GridSpec g;
    g.n = n;
    g.dx = step;
    g.x0 = -0.5 * step * static_cast<double>(n);
    return g;
}

PatternGrid double_slit_state(double sigma, double d, double chi, double phi_total,
                              const GridSpec& grid) {
    if (!(sigma > 0.0) || !(d > 0.0) || !(chi > 0.0)) {
        throw DomainError("double_slit_state: sigma, d, chi must be positive");
    }
    if (!is_power_of_two(grid.n)) throw DomainError("double_slit_state: n must be a power of two");
    const double sigma_d = sigma * sigma / (2.0 * chi * d);
    const double span = grid.dx * static_cast<double>(grid.n);
    if (grid.dx > sigma_d / 2.0) {
        throw DomainError("double_slit_state: step too coarse for the slit width");
    }
    if (span < d + 8.0 * sigma_d) {
        throw DomainError("double_slit_state: grid span does not cover both slits");
    }

    PatternGrid g;
    g.x0 = grid.x0;
    g.dx = grid.dx;
    g.t = 0.0;
    g.amp.resize(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double x = g.axis(i);
        const double gp = (x - d / 2.0) / (2.0 * sigma_d);
        const double gm = (x + d / 2.0) / (2.0 * sigma_d);
        const double envelope = std::exp(-x * x / (4.0 * sigma * sigma));
        const double slits = std::exp(-gp * gp) + std::exp(-gm * gm);
        const double phase = phi_total * (x / sigma) * (x / sigma);
        g.amp[i] = std::polar(envelope * slits, phase);
    }
    const double n0 = g.norm();
    if (!(n0 > 0.0)) throw NumericalError("double_slit_state: state vanished on the grid");
    const double scale = 1.0 / std::sqrt(n0);
    for (auto& v : g.amp) v *= scale;
    return g;
}

PatternGrid momentum_distribution(const PatternGrid& g) {
    if (g.is_probability || g.momentum_space) {
        throw DomainError("momentum_distribution: needs a position-space amplitude grid");
    }
    const std::size_t n = g.size();
    std::vector<std::complex<double>> work = g.amp;
    fft(work, false);

    PatternGrid out;
    const double dp = 2.0 * pi * hbar / (g.dx * static_cast<double>(n));
    out.dx = dp;
    out.x0 = -dp * static_cast<double>(n / 2);
    out.t = g.t;
    out.momentum_space = true;
    out.amp.resize(n);
    const double scale = g.dx * std::sqrt(static_cast<double>(n) / (2.0 * pi * hbar));
    for (std::size_t j = 0; j < n; ++j) {
        const double p = dp * signed_frequency_index(j, n);
        const std::complex<double> phase = std::polar(1.0, -p * g.x0 / hbar);
        // fftshift into ascending momentum order
        const std::size_t dst = (j + n / 2) % n;
        out.amp[dst] = work[j] * phase * scale;
    }
    check_norm(out, "momentum_distribution");
    return out;
}

PatternGrid free_propagate(const PatternGrid& g, double t, double mass) {
    if (g.is_probability || g.momentum_space) {
        throw DomainError("free_propagate: needs a position-space amplitude grid");
    }
    if (t < 0.0 || !(mass > 0.0)) throw DomainError("free_propagate: bad arguments");
    const std::size_t n = g.size();

    // Predict the envelope at the target time from the current moments and
    // require the grid to hold 4 sigma on either side of the drifted mean.
    {
        PatternGrid prob = probability(g);
        const double mean_x = prob.mean();
        const double var_x = prob.variance();
        PatternGrid mom = momentum_distribution(g);
        PatternGrid momp = probability(mom);
        const double mean_p = momp.mean();
        const double var_p = momp.variance();
        const double mean_f = mean_x + mean_p * t / mass;
        const double sig_f = std::sqrt(var_x) + std::sqrt(var_p) * t / mass;
        const double lo = g.x0;
        const double hi = g.x0 + g.span();
        if (mean_f - 4.0 * sig_f < lo || mean_f + 4.0 * sig_f > hi) {
            throw DomainError("free_propagate: envelope would outgrow the grid; enlarge it");
        }
    }

    std::vector<std::complex<double>> work = g.amp;
    fft(work, false);
    const double dp = 2.0 * pi * hbar / (g.dx * static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        const double p = dp * signed_frequency_index(j, n);
        work[j] *= std::polar(1.0, -p * p * t / (2.0 * mass * hbar));
    }
    fft(work, true);

    PatternGrid out = g;
    out.amp = std::move(work);
    out.t = g.t + t;
    check_norm(out, "free_propagate");
    return out;
}

PatternGrid probability(const PatternGrid& g) {
    PatternGrid out = g;
    out.is_probability = true;
    if (!g.is_probability) {
        for (auto& v : out.amp) v = std::complex<double>(std::norm(v), 0.0);
    }
    return out;
}

PatternGrid apply_localization_to_pattern(const PatternGrid& density,
                                          const CompositeModel& models, double t, double mass) {
    if (!density.is_probability) {
        throw DomainError("apply_localization_to_pattern: needs a probability grid");
    }
    if (t < 0.0 || !(mass > 0.0)) throw DomainError("apply_localization_to_pattern: bad args");
    const std::size_t n = density.size();
    std::vector<std::complex<double>> work = density.amp;
    fft(work, false);
    const double dp = 2.0 * pi * hbar / (density.dx * static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        const double p = dp * signed_frequency_index(j, n);
        work[j] *= kernel_factor(models, p, 0.0, t, mass);
    }
    fft(work, true);

    PatternGrid out = density;
    for (std::size_t j = 0; j < n; ++j) out.amp[j] = std::complex<double>(work[j].real(), 0.0);
    check_norm(out, "apply_localization_to_pattern");
    return out;
}

PatternGrid apply_localization_to_pattern(const PatternGrid& density,
                                          const LocalizationModel& model, double t, double mass) {
    return apply_localization_to_pattern(density, CompositeModel({model}), t, mass);
}

PatternGrid simulate_pattern(const ProtocolPlan& plan, const SphereSpec& sphere,
                             const TrapSpec& /*trap*/, const CompositeModel& models,
                             double phi_total) {
    const double mass = sphere_mass(sphere);
    if (!(plan.d < std::sqrt(8.0) * plan.sigma)) {
        throw DomainError("simulate_pattern: condition i failed (d >= sqrt(8) sigma)");
    }
    if (!(plan.d > plan.sigma / std::sqrt(plan.chi))) {
        throw DomainError("simulate_pattern: condition ii failed (d <= sigma/sqrt(chi))");
    }

    const GridSpec grid = recommend_grid(plan.sigma, plan.d, plan.chi, phi_total, mass, plan.t2);
    PatternGrid psi = double_slit_state(plan.sigma, plan.d, plan.chi, phi_total, grid);
    psi = free_propagate(psi, plan.t2, mass);
    PatternGrid dens = probability(psi);

    bool any = false;
    for (const auto& c : models.components) {
        if (c.lambda() > 0.0 || c.gamma() > 0.0) any = true;
    }
    if (any) dens = apply_localization_to_pattern(dens, models, plan.t2, mass);
    return dens;
}

std::optional<double> extract_visibility(const PatternGrid& density, double x_f_hint) {
    if (!density.is_probability) {
        throw DomainError("extract_visibility: needs a probability grid");
    }
    if (!(x_f_hint > 0.0)) throw DomainError("extract_visibility: x_f must be positive");
    if (3.0 * x_f_hint > density.span()) return std::nullopt;   // fewer than 3 fringes fit

    const double k = 2.0 * pi / x_f_hint;
    double re = 0.0, im = 0.0, dc = 0.0;
    for (std::size_t i = 0; i < density.size(); ++i) {
        const double v = density.amp[i].real();
        const double ph = k * density.axis(i);
        re += v * std::cos(ph);
        im += v * std::sin(ph);
        dc += v;
    }
    if (!(dc > 0.0)) return std::nullopt;
    const double contrast = 2.0 * std::hypot(re, im) / dc;
    if (contrast < 1e-9) return std::nullopt;
    return contrast;
}

std::vector<double> detect_peaks(const PatternGrid& density, double rel_threshold) {
    const auto v = density.values();
    if (v.size() < 3) return {};
    const double peak = *std::max_element(v.begin(), v.end());
    const double floor = rel_threshold * peak;
    std::vector<double> out;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        if (v[i] > floor && v[i] > v[i - 1] && v[i] >= v[i + 1]) {
            // parabolic refinement
            const double denom = v[i - 1] - 2.0 * v[i] + v[i + 1];
            double shift = 0.0;
            if (denom < 0.0) shift = 0.5 * (v[i - 1] - v[i + 1]) / denom;
            out.push_back(density.axis(i) + shift * density.dx);
        }
    }
    return out;
}

}  // namespace merid
