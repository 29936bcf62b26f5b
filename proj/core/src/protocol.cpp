#include "merid/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "merid/errors.hpp"
#include "merid/gaussian.hpp"

namespace merid {

using consts::hbar;
using consts::pi;

ProtocolPlan::ProtocolPlan(double t1_, double t2_, double d_, double chi_, double delta_x_,
                           double sigma_)
    : t1(t1_), t2(t2_), d(d_), chi(chi_), delta_x(delta_x_), sigma(sigma_),
      sigma_d(sigma_ * sigma_ / (2.0 * chi_ * d_)) {
    if (!(t1 > 0.0) || !(t2 > 0.0) || !(d > 0.0) || !(chi > 0.0) || !(delta_x > 0.0)
        || !(sigma > 0.0)) {
        throw DomainError("ProtocolPlan: all parameters must be positive");
    }
}

double fringe_spacing(double mass, double d, double t2) {
    if (!(mass > 0.0) || !(d > 0.0) || !(t2 > 0.0)) {
        throw DomainError("fringe_spacing: all arguments must be positive");
    }
    return 2.0 * pi * hbar * t2 / (mass * d);
}

namespace {

// xi(t1) with the pooled quadratic localization parameter acting during the
// expansion.
double xi_at_t1(const SphereSpec& sphere, const TrapSpec& trap, double t1, double lambda_pool) {
    const auto s0 = thermal_initial_state(sphere_mass(sphere), trap.omega, trap.nbar);
    return coherence_length(evolve_with_decoherence(s0, t1, lambda_pool));
}

double xi_s_at_t1(const SphereSpec& sphere, const TrapSpec& trap, double t1) {
    const auto exp_rec = expand_free_coherent(sphere_mass(sphere), trap.omega, t1);
    return coherence_length_schrodinger(exp_rec.sigma2, trap.nbar);
}

}  // namespace

ConditionReport check_conditions(const ProtocolPlan& plan, const SphereSpec& sphere,
                                 const TrapSpec& trap, const CompositeModel& models,
                                 const std::optional<OptomechBounds>& om, const Thresholds& th) {
    ConditionReport report;
    const double mass = sphere_mass(sphere);
    auto add = [&](std::string id, std::string label, double value, double bound, bool pass) {
        report.checks.push_back({std::move(id), std::move(label), value, bound, pass});
        report.overall_pass = report.overall_pass && report.checks.back().pass;
    };

    const double sqrt8_sigma = std::sqrt(8.0) * plan.sigma;
    add("i", "d < sqrt(8) sigma", plan.d, sqrt8_sigma, plan.d < sqrt8_sigma);

    const double d_min = plan.sigma / std::sqrt(plan.chi);
    add("ii", "d > sigma/sqrt(chi)", plan.d, d_min, plan.d > d_min);

    const double t1_overlap = std::sqrt(2.0 * plan.t2 * plan.chi / trap.omega);
    add("iii", "t1 <= sqrt(2 t2 chi / omega)", plan.t1, t1_overlap, plan.t1 <= t1_overlap);

    const double d_fringe = fringe_spacing(mass, plan.delta_x, plan.t2);
    add("iv", "d < 2 pi hbar t2 / (m delta_x)", plan.d, d_fringe, plan.d < d_fringe);

    const double lambda_pool = models.lambda_quadratic_at(plan.d);
    const double gamma_sat = models.gamma_saturated_at(plan.d);

    const double xi1 = xi_at_t1(sphere, trap, plan.t1, lambda_pool);
    add("v", "d < xi(t1)", plan.d, xi1, plan.d < xi1);

    if (gamma_sat > 0.0) {
        add("vi", "t1 gamma_sat small", plan.t1 * gamma_sat, th.t1_gamma_max,
            plan.t1 * gamma_sat <= th.t1_gamma_max);
        const double xis = xi_s_at_t1(sphere, trap, plan.t1);
        add("vi", "d < xi_s(t1)", plan.d, xis, plan.d < xis);
    }

    if (lambda_pool > 0.0) {
        const double d_vis = std::sqrt(3.0 / (lambda_pool * plan.t2));
        add("vii", "d < sqrt(3/(Lambda t2))", plan.d, d_vis, plan.d < d_vis);
    }

    if (gamma_sat > 0.0) {
        add("viii", "t2 gamma_sat small", plan.t2 * gamma_sat, th.t2_gamma_max,
            plan.t2 * gamma_sat <= th.t2_gamma_max);
    }

    if (om) {
        add("ix", "t1 <= t1_om/4", plan.t1, om->t1_om / 4.0, plan.t1 <= om->t1_om / 4.0);
        const double xis = xi_s_at_t1(sphere, trap, plan.t1);
        add("ix", "d < xi_s(t1)", plan.d, xis, plan.d < xis);
    }

    return report;
}

PhaseCheck phase_condition(double phi_total, double d, double sigma, const Thresholds& th) {
    if (!(sigma > 0.0)) throw DomainError("phase_condition: sigma must be positive");
    PhaseCheck out;
    out.margin = std::fabs(phi_total) * d * d / (4.0 * sigma * sigma);
    out.pass = out.margin < th.phase_max;
    return out;
}

SelectedTimes select_times(const SphereSpec& sphere, const TrapSpec& trap,
                           const EnvironmentSpec& env, double chi,
                           const CompositeModel& std_models, const Thresholds& th) {
    const double gamma_air = air_saturation_rate(env, sphere);
    if (!(gamma_air > 0.0)) {
        throw DomainError("select_times: gamma_air is zero, provide t2 explicitly");
    }
    SelectedTimes out;
    out.t2 = th.t2_gamma_max / gamma_air;

    const double t1_overlap = std::sqrt(2.0 * out.t2 * chi / trap.omega);
    const double t1_gas = th.t1_gamma_max / gamma_air;
    double t1 = t1_overlap;
    out.pinned_by = T1Pin::chi_overlap;
    const double lambda_q = std_models.lambda_pure_quadratic();
    if (const auto tm = t_max_coherence(sphere_mass(sphere), trap.nbar, trap.omega, lambda_q);
        tm && *tm < t1) {
        t1 = *tm;
        out.pinned_by = T1Pin::coherence_max;
    }
    if (t1_gas < t1) {
        t1 = t1_gas;
        out.pinned_by = T1Pin::gas_rate;
    }
    out.t1 = t1;
    return out;
}

namespace {

// Allowed separations at fixed times, assembled piecewise between the 2a
// breakpoints of the saturating sources. Within one piece every component
// has a fixed regime: quadratic components pool their Lambda into the
// coherence and visibility bounds; saturated ones impose their rate caps
// and the xi_s bound.
std::vector<DInterval> set_at_times(const SphereSpec& sphere, const TrapSpec& trap, double chi,
                                    double delta_x, const CompositeModel& models,
                                    const SelectedTimes& times, const Thresholds& th) {
    const double mass = sphere_mass(sphere);
    const auto exp_rec = expand_free_coherent(mass, trap.omega, times.t1);
    const double sigma = std::sqrt(exp_rec.sigma2);
    const double d_lo = sigma / std::sqrt(chi);

    double hi_geom = std::sqrt(8.0) * sigma;
    hi_geom = std::min(hi_geom, fringe_spacing(mass, delta_x, times.t2));
    if (!(hi_geom > d_lo)) return {};

    std::vector<double> cuts{d_lo};
    for (const auto& c : models.components) {
        if (c.kind() == LocalizationKind::saturating) {
            const double b = 2.0 * c.a();
            if (b > d_lo && b < hi_geom) cuts.push_back(b);
        }
    }
    cuts.push_back(hi_geom);
    std::sort(cuts.begin(), cuts.end());

    const double xi_s = xi_s_at_t1(sphere, trap, times.t1);
    std::vector<DInterval> pieces;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i];
        const double top = cuts[i + 1];
        double lambda_pool = 0.0;
        double gamma_sat = 0.0;
        bool any_saturated = false;
        for (const auto& c : models.components) {
            if (c.kind() == LocalizationKind::pure_quadratic || top <= 2.0 * c.a()) {
                lambda_pool += c.lambda();
            } else {
                gamma_sat += c.gamma();
                any_saturated = true;
            }
        }
        if (any_saturated && (times.t1 * gamma_sat > th.t1_gamma_max
                              || times.t2 * gamma_sat > th.t2_gamma_max * (1.0 + 1e-12))) {
            continue;
        }
        double hi = top;
        hi = std::min(hi, xi_at_t1(sphere, trap, times.t1, lambda_pool));
        if (any_saturated) hi = std::min(hi, xi_s);
        if (lambda_pool > 0.0) hi = std::min(hi, std::sqrt(3.0 / (lambda_pool * times.t2)));
        if (hi > lo) {
            if (!pieces.empty() && pieces.back().hi >= lo) {
                pieces.back().hi = std::max(pieces.back().hi, hi);
            } else {
                pieces.push_back({lo, hi});
            }
        }
    }
    return pieces;
}

DInterval widest(const std::vector<DInterval>& set) {
    DInterval best;
    for (const auto& iv : set) {
        if (iv.width() > best.width()
            || (iv.width() == best.width() && iv.hi > best.hi)) {
            best = iv;
        }
    }
    return best;
}

// set difference a \ b for disjoint ascending interval lists
std::vector<DInterval> subtract(const std::vector<DInterval>& a,
                                const std::vector<DInterval>& b) {
    std::vector<DInterval> out;
    for (auto iv : a) {
        std::vector<DInterval> current{iv};
        for (const auto& cut : b) {
            std::vector<DInterval> next;
            for (const auto& piece : current) {
                if (cut.hi <= piece.lo || cut.lo >= piece.hi) {
                    next.push_back(piece);
                    continue;
                }
                if (cut.lo > piece.lo) next.push_back({piece.lo, cut.lo});
                if (cut.hi < piece.hi) next.push_back({cut.hi, piece.hi});
            }
            current = std::move(next);
        }
        out.insert(out.end(), current.begin(), current.end());
    }
    return out;
}

}  // namespace

std::vector<DInterval> allowed_d_set(const SphereSpec& sphere, const TrapSpec& trap,
                                     const EnvironmentSpec& env, double chi, double delta_x,
                                     const CompositeModel& models, const Thresholds& th) {
    const auto times = select_times(sphere, trap, env, chi, models, th);
    return set_at_times(sphere, trap, chi, delta_x, models, times, th);
}

DInterval allowed_d_interval(const SphereSpec& sphere, const TrapSpec& trap,
                             const EnvironmentSpec& env, double chi, double delta_x,
                             const CompositeModel& models, const Thresholds& th) {
    return widest(allowed_d_set(sphere, trap, env, chi, delta_x, models, th));
}

namespace {

DiagramRow diagram_row(double diameter, const SweepScenario& sc,
                       const std::optional<CollapseModelId>& collapse) {
    const SphereSpec sphere = sc.table.make_sphere(diameter / 2.0, sc.T_internal);
    const EnvironmentSpec env = sc.table.make_environment(sc.pressure);
    const TrapSpec trap = sc.table.make_trap();

    const CompositeModel std_models = standard_model(env, sphere);
    DiagramRow row;
    row.diameter = diameter;
    const auto times = select_times(sphere, trap, env, sc.chi, std_models, sc.thresholds);
    row.t1 = times.t1;
    row.t2 = times.t2;
    const auto std_set =
        set_at_times(sphere, trap, sc.chi, sc.table.delta_x, std_models, times, sc.thresholds);
    row.standard = widest(std_set);

    if (collapse) {
        CompositeModel with_cm = std_models;
        with_cm.components.push_back(model_for(*collapse, sphere));
        const auto cm_set =
            set_at_times(sphere, trap, sc.chi, sc.table.delta_x, with_cm, times, sc.thresholds);
        row.with_collapse = widest(cm_set);
        row.green = widest(subtract(std_set, cm_set));
    } else {
        row.with_collapse = row.standard;
    }
    return row;
}

}  // namespace

FeasibilityDiagram sweep_diagram(double diameter_lo, double diameter_hi, int n_samples,
                                 const SweepScenario& scenario,
                                 const std::optional<CollapseModelId>& collapse, int n_threads) {
    if (!(diameter_lo > 0.0) || !(diameter_hi > diameter_lo)) {
        throw DomainError("sweep_diagram: need 0 < diameter_lo < diameter_hi");
    }
    if (n_samples < 2) throw DomainError("sweep_diagram: need at least 2 samples");

    std::vector<double> diameters(n_samples);
    const double log_lo = std::log(diameter_lo);
    const double log_hi = std::log(diameter_hi);
    for (int i = 0; i < n_samples; ++i) {
        diameters[i] = std::exp(log_lo + (log_hi - log_lo) * i / (n_samples - 1));
    }

    FeasibilityDiagram diagram;
    diagram.rows.resize(n_samples);

    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    const int workers = std::clamp(n_threads, 1, std::max(1, hw > 0 ? hw : 1));
    if (workers <= 1) {
        for (int i = 0; i < n_samples; ++i) {
            diagram.rows[i] = diagram_row(diameters[i], scenario, collapse);
        }
        return diagram;
    }

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (int i = w; i < n_samples; i += workers) {
                diagram.rows[i] = diagram_row(diameters[i], scenario, collapse);
            }
        });
    }
    for (auto& t : pool) t.join();
    return diagram;
}

FalsificationWindow falsification_time_window(const LocalizationModel& collapse, double d,
                                              double gamma_air, const Thresholds& th) {
    if (!(d > 0.0)) throw DomainError("falsification_time_window: d must be positive");
    if (gamma_air < 0.0) throw DomainError("falsification_time_window: gamma_air negative");
    FalsificationWindow w;
    const double lambda_cm = collapse.lambda();
    w.t_lo = lambda_cm > 0.0 ? 3.0 / (lambda_cm * d * d)
                             : std::numeric_limits<double>::infinity();
    w.t_hi = gamma_air > 0.0 ? 1.0 / gamma_air : std::numeric_limits<double>::infinity();
    w.open = w.t_lo < th.t2_gamma_max * w.t_hi;
    return w;
}

}  // namespace merid
