#pragma once

#include <optional>
#include <string>
#include <vector>

#include "merid/collapse_models.hpp"
#include "merid/constants.hpp"
#include "merid/localization.hpp"
#include "merid/optomech.hpp"
#include "merid/standard_decoherence.hpp"

namespace merid {

/// Operational factors behind the protocol's "much less than" requirements.
struct Thresholds {
    double t1_gamma_max = 0.05;   // t1 * gamma_sat must stay below this
    double t2_gamma_max = 0.1;    // t2 * gamma_sat must stay below this
    double phase_max = 0.1;       // |phi| d^2 / (4 sigma^2) must stay below this
};

/// One protocol run: expand for t1, slit of separation d and strength chi,
/// interfere for t2, read out with resolution delta_x.
struct ProtocolPlan {
    double t1;        // s
    double t2;        // s
    double d;         // m
    double chi;
    double delta_x;   // m
    double sigma;     // wave-packet width at the slit, m
    double sigma_d;   // slit width sigma^2 / (2 chi d), m

    ProtocolPlan(double t1, double t2, double d, double chi, double delta_x, double sigma);
};

/// x_f = 2 pi hbar t2 / (m d).
double fringe_spacing(double mass, double d, double t2);

struct ConditionCheck {
    std::string id;      // i .. ix
    std::string label;
    double value;
    double bound;
    bool pass;
};

struct ConditionReport {
    std::vector<ConditionCheck> checks;
    bool overall_pass = true;
};

/// Evaluates every feasibility row for a concrete plan. Saturating sources
/// switch between their quadratic and saturated rows by comparing d with
/// their own 2a; pure-quadratic sources always use the quadratic rows.
ConditionReport check_conditions(const ProtocolPlan& plan, const SphereSpec& sphere,
                                 const TrapSpec& trap, const CompositeModel& models,
                                 const std::optional<OptomechBounds>& om = std::nullopt,
                                 const Thresholds& th = {});

struct PhaseCheck {
    double margin;   // |phi| d^2 / (4 sigma^2)
    bool pass;
};

PhaseCheck phase_condition(double phi_total, double d, double sigma, const Thresholds& th = {});

enum class T1Pin { chi_overlap, coherence_max, gas_rate };

struct SelectedTimes {
    double t1;
    double t2;
    T1Pin pinned_by;
};

/// t2 = t2_gamma_max / gamma_air and
/// t1 = min{ sqrt(2 t2 chi / omega), t_max, t1_gamma_max / gamma_air },
/// with t_max taken from the pure-quadratic part of the standard sources.
SelectedTimes select_times(const SphereSpec& sphere, const TrapSpec& trap,
                           const EnvironmentSpec& env, double chi,
                           const CompositeModel& std_models, const Thresholds& th = {});

struct DInterval {
    double lo = 0.0;
    double hi = 0.0;
    bool empty() const { return !(hi > lo); }
    double width() const { return empty() ? 0.0 : hi - lo; }
};

/// Slit separations passing every applicable row at the selected times:
/// sigma/sqrt(chi) < d < min{ sqrt(8) sigma, fringe resolution, xi(t1),
/// xi_s(t1), sqrt(3/(Lambda t2)) }. Each saturating source switches from its
/// quadratic to its saturated rows at its own 2a, so the allowed set is
/// assembled piecewise between those breakpoints; the result is the union
/// as disjoint ascending intervals.
std::vector<DInterval> allowed_d_set(const SphereSpec& sphere, const TrapSpec& trap,
                                     const EnvironmentSpec& env, double chi, double delta_x,
                                     const CompositeModel& models, const Thresholds& th = {});

/// Widest connected component of allowed_d_set (ties broken towards larger d).
DInterval allowed_d_interval(const SphereSpec& sphere, const TrapSpec& trap,
                             const EnvironmentSpec& env, double chi, double delta_x,
                             const CompositeModel& models, const Thresholds& th = {});

struct DiagramRow {
    double diameter = 0.0;            // m
    DInterval standard;               // gas + blackbody only
    DInterval with_collapse;          // same times, Lambda extended by the collapse source
    DInterval green;                  // standard minus with_collapse
    double t1 = 0.0;
    double t2 = 0.0;
};

struct FeasibilityDiagram {
    std::vector<DiagramRow> rows;
};

/// Material/trap/readout context for a diameter sweep.
struct SweepScenario {
    DefaultParameterSet table;
    double pressure;     // Pa
    double T_internal;   // K
    double chi;
    Thresholds thresholds{};
};

/// d-vs-D diagram over [d_lo, d_hi] diameters (log-spaced, n_samples >= 2).
/// The collapse source, when present, enters only the coherence and
/// visibility rows through Lambda_total; t1 and t2 stay pinned by the
/// standard sources. Deterministic for any thread count.
FeasibilityDiagram sweep_diagram(double diameter_lo, double diameter_hi, int n_samples,
                                 const SweepScenario& scenario,
                                 const std::optional<CollapseModelId>& collapse,
                                 int n_threads = 1);

struct FalsificationWindow {
    double t_lo;    // 3 / (Lambda_cm d^2), s
    double t_hi;    // 1 / gamma_air, s (inf when gamma_air == 0)
    bool open;      // t_lo below the t2_gamma_max fraction of t_hi
};

/// Evolution times long enough for the collapse source to erase the fringes
/// yet short enough for the gas to spare them. The quadratic exponent
/// Lambda d^2/3 presumes d below the source's saturation scale.
FalsificationWindow falsification_time_window(const LocalizationModel& collapse, double d,
                                              double gamma_air, const Thresholds& th = {});

}  // namespace merid
