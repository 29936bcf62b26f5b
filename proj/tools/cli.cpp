#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "merid/collapse_models.hpp"
#include "merid/config.hpp"
#include "merid/constants.hpp"
#include "merid/errors.hpp"
#include "merid/gaussian.hpp"
#include "merid/interference.hpp"
#include "merid/localization.hpp"
#include "merid/optomech.hpp"
#include "merid/protocol.hpp"
#include "merid/standard_decoherence.hpp"

namespace merid::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

int thread_count() {
    if (const char* env = std::getenv("MERID_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string timestamp_iso() {
    std::time_t t;
    if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) {
        t = static_cast<std::time_t>(std::atoll(env));
    } else {
        t = std::time(nullptr);
    }
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

/// Scenario knobs on top of the parameter table.
struct Scenario {
    double pressure_torr = 1e-12;
    double T_internal = 200.0;
    double chi = 1000.0;
    Thresholds thresholds{};
};

struct RunContext {
    DefaultParameterSet table;
    Scenario scenario;
    std::string out_dir = ".";
    std::vector<std::string> model_strings;
    std::string command;
    json args = json::object();

    std::vector<std::pair<std::string, std::string>> outputs;   // path, bytes

    EnvironmentSpec environment() const {
        return table.make_environment(torr_to_pascal(scenario.pressure_torr));
    }
    SphereSpec sphere(double diameter_m) const {
        return table.make_sphere(diameter_m / 2.0, scenario.T_internal);
    }
    TrapSpec trap() const { return table.make_trap(); }
    CavitySpec cavity() const {
        return CavitySpec(table.finesse, table.cavity_length, table.wavelength, table.waist);
    }

    void write_file(const std::string& name, const std::string& bytes) {
        const fs::path path = fs::path(out_dir) / name;
        fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
        std::ofstream f(path, std::ios::binary);
        if (!f) throw NumericalError("cannot write " + path.string());
        f << bytes;
        outputs.emplace_back(path.string(), bytes);
    }

    json scenario_json() const {
        json s;
        s["pressure_torr"] = scenario.pressure_torr;
        s["T_internal"] = scenario.T_internal;
        s["chi"] = scenario.chi;
        s["models"] = model_strings;
        s["t1_gamma_max"] = scenario.thresholds.t1_gamma_max;
        s["t2_gamma_max"] = scenario.thresholds.t2_gamma_max;
        s["phase_max"] = scenario.thresholds.phase_max;
        return s;
    }

    void write_manifest() {
        json m;
        m["command"] = command;
        m["tool_version"] = kVersion;
        m["timestamp"] = timestamp_iso();
        m["parameters"] = json::parse(parameter_set_to_json_text(table));
        m["scenario"] = scenario_json();
        m["args"] = args;
        json outs = json::array();
        for (const auto& [path, bytes] : outputs) {
            json o;
            o["path"] = path;
            o["bytes"] = bytes.size();
            char hex[32];
            std::snprintf(hex, sizeof hex, "%016llx",
                          static_cast<unsigned long long>(fnv1a64(bytes)));
            o["fnv1a64"] = hex;
            outs.push_back(o);
        }
        m["outputs"] = outs;
        const fs::path path = fs::path(out_dir) / (command + "_manifest.json");
        std::ofstream f(path, std::ios::binary);
        if (!f) throw NumericalError("cannot write " + path.string());
        f << m.dump(2) << "\n";
    }
};

void apply_set(RunContext& ctx, const std::string& kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw DomainError("--set expects key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    double value = 0.0;
    try {
        value = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
        throw DomainError("--set " + key + ": bad numeric value");
    }
    if (key == "pressure_torr") {
        ctx.scenario.pressure_torr = value;
    } else if (key == "T_internal") {
        ctx.scenario.T_internal = value;
    } else if (key == "chi") {
        ctx.scenario.chi = value;
    } else if (key == "t1_gamma_max") {
        ctx.scenario.thresholds.t1_gamma_max = value;
    } else if (key == "t2_gamma_max") {
        ctx.scenario.thresholds.t2_gamma_max = value;
    } else if (key == "phase_max") {
        ctx.scenario.thresholds.phase_max = value;
    } else {
        apply_override(ctx.table, key, value);   // throws on unknown keys
    }
}

std::string interval_csv(const DInterval& iv) {
    if (iv.empty()) return ",";
    return fmt17(iv.lo) + "," + fmt17(iv.hi);
}

json interval_json(const DInterval& iv) {
    if (iv.empty()) return json();
    return json{{"lo", iv.lo}, {"hi", iv.hi}};
}

// ---------------------------------------------------------------- rates ----

int cmd_rates(RunContext& ctx, double diameter_m, std::ostream& out) {
    const auto sphere = ctx.sphere(diameter_m);
    const auto env = ctx.environment();

    struct Row {
        std::string name;
        LocalizationModel model;
    };
    std::vector<Row> rows;
    rows.push_back({"air", air_model(env, sphere)});
    rows.push_back({"bb", blackbody_model(sphere, env)});
    for (const auto& s : ctx.model_strings) {
        const auto id = parse_collapse_model(s);
        rows.push_back({s, model_for(id, sphere)});
    }

    std::ostringstream csv;
    csv << "source,gamma_per_s,a_m,lambda_per_m2_s\n";
    json jrows = json::array();
    for (const auto& r : rows) {
        const bool quad = r.model.kind() == LocalizationKind::pure_quadratic;
        csv << r.name << "," << fmt17(r.model.gamma()) << ","
            << (quad ? "inf" : fmt17(r.model.a())) << "," << fmt17(r.model.lambda()) << "\n";
        json j;
        j["source"] = r.name;
        j["kind"] = quad ? "pure-quadratic" : "saturating";
        j["gamma_per_s"] = r.model.gamma();
        if (!quad) j["a_m"] = r.model.a();
        j["lambda_per_m2_s"] = r.model.lambda();
        jrows.push_back(j);
    }
    ctx.write_file("rates.csv", csv.str());
    ctx.write_file("rates.json", json{{"diameter_m", diameter_m}, {"rows", jrows}}.dump(2) + "\n");
    out << csv.str();
    return 0;
}

// ------------------------------------------------------------ coherence ----

int cmd_coherence(RunContext& ctx, double diameter_m, double t_lo, double t_hi, int points,
                  std::ostream& out) {
    if (!(t_lo > 0.0) || !(t_hi > t_lo) || points < 2) {
        throw DomainError("coherence: need 0 < t-min < t-max and at least 2 points");
    }
    const auto sphere = ctx.sphere(diameter_m);
    const auto env = ctx.environment();
    const auto trap = ctx.trap();
    const double mass = sphere_mass(sphere);

    double lambda = blackbody_localization(sphere, env).total;
    for (const auto& s : ctx.model_strings) {
        lambda += model_for(parse_collapse_model(s), sphere).lambda();
    }

    std::ostringstream csv;
    csv << "t_s,xi_m,xi_s_m\n";
    const auto s0 = thermal_initial_state(mass, trap.omega, trap.nbar);
    for (int i = 0; i < points; ++i) {
        const double t = t_lo * std::pow(t_hi / t_lo, static_cast<double>(i) / (points - 1));
        const double xi = coherence_length(evolve_with_decoherence(s0, t, lambda));
        const double xis = coherence_length_schrodinger(
            expand_free_coherent(mass, trap.omega, t).sigma2, trap.nbar);
        csv << fmt17(t) << "," << fmt17(xi) << "," << fmt17(xis) << "\n";
    }
    ctx.write_file("coherence.csv", csv.str());

    json summary;
    summary["diameter_m"] = diameter_m;
    summary["lambda_per_m2_s"] = lambda;
    const auto tm = t_max_coherence(mass, trap.nbar, trap.omega, lambda);
    const auto xm = xi_max(mass, trap.nbar, trap.omega, lambda);
    summary["t_max_s"] = tm ? json(*tm) : json("unbounded");
    summary["xi_max_m"] = xm ? json(*xm) : json("unbounded");
    ctx.write_file("coherence_summary.json", summary.dump(2) + "\n");
    out << summary.dump(2) << "\n";
    return 0;
}

// -------------------------------------------------------------- diagram ----

int cmd_diagram(RunContext& ctx, double dmin_m, double dmax_m, int samples, std::ostream& out) {
    if (!(dmin_m > 0.0) || !(dmax_m > dmin_m)) {
        throw DomainError("diagram: need 0 < --dmin-nm < --dmax-nm");
    }
    if (samples < 2) {
        samples = static_cast<int>(std::ceil(64.0 * std::log10(dmax_m / dmin_m))) + 1;
        samples = std::max(samples, 2);
    }
    if (ctx.model_strings.size() > 1) {
        throw DomainError("diagram: at most one collapse model per sweep");
    }
    std::optional<CollapseModelId> collapse;
    if (!ctx.model_strings.empty()) collapse = parse_collapse_model(ctx.model_strings.front());

    SweepScenario sc;
    sc.table = ctx.table;
    sc.pressure = torr_to_pascal(ctx.scenario.pressure_torr);
    sc.T_internal = ctx.scenario.T_internal;
    sc.chi = ctx.scenario.chi;
    sc.thresholds = ctx.scenario.thresholds;
    const auto dia = sweep_diagram(dmin_m, dmax_m, samples, sc, collapse, thread_count());

    std::ostringstream csv;
    csv << "D_m,d_lo_std_m,d_hi_std_m,d_lo_cm_m,d_hi_cm_m,green_lo_m,green_hi_m\n";
    json jrows = json::array();
    double green_d_lo = 0.0, green_d_hi = 0.0;
    for (const auto& r : dia.rows) {
        csv << fmt17(r.diameter) << "," << interval_csv(r.standard) << ","
            << interval_csv(r.with_collapse) << "," << interval_csv(r.green) << "\n";
        json j;
        j["D_m"] = r.diameter;
        j["standard"] = interval_json(r.standard);
        j["with_collapse"] = interval_json(r.with_collapse);
        j["green"] = interval_json(r.green);
        jrows.push_back(j);
        if (!r.green.empty()) {
            if (green_d_lo == 0.0) green_d_lo = r.diameter;
            green_d_hi = r.diameter;
        }
    }
    ctx.write_file("diagram.csv", csv.str());
    json jout;
    jout["rows"] = jrows;
    jout["green_extent_D_m"] =
        green_d_lo > 0.0 ? json{{"lo", green_d_lo}, {"hi", green_d_hi}} : json();
    ctx.write_file("diagram.json", jout.dump(2) + "\n");

    if (green_d_lo > 0.0) {
        out << "green region spans D in [" << fmt17(green_d_lo * 1e9) << ", "
            << fmt17(green_d_hi * 1e9) << "] nm\n";
    } else {
        out << "green region empty\n";
    }
    return 0;
}

// ------------------------------------------------------------ interfere ----

int cmd_interfere(RunContext& ctx, double diameter_m, double d_m, std::optional<double> t2_cli,
                  double phi_total, std::ostream& out) {
    const auto sphere = ctx.sphere(diameter_m);
    const auto env = ctx.environment();
    const auto trap = ctx.trap();
    const double mass = sphere_mass(sphere);
    const CompositeModel std_models = standard_model(env, sphere);

    const auto times =
        select_times(sphere, trap, env, ctx.scenario.chi, std_models, ctx.scenario.thresholds);
    const double t2 = t2_cli.value_or(times.t2);
    const double sigma = std::sqrt(expand_free_coherent(mass, trap.omega, times.t1).sigma2);
    const ProtocolPlan plan(times.t1, t2, d_m, ctx.scenario.chi, ctx.table.delta_x, sigma);

    if (!(plan.d < std::sqrt(8.0) * plan.sigma)) {
        throw DomainError("condition i failed: d >= sqrt(8) sigma");
    }
    if (!(plan.d > plan.sigma / std::sqrt(plan.chi))) {
        throw DomainError("condition ii failed: d <= sigma/sqrt(chi)");
    }

    const double x_f = fringe_spacing(mass, plan.d, plan.t2);

    struct Stack {
        std::string label;
        CompositeModel models;
    };
    std::vector<Stack> stacks;
    stacks.push_back({"standard", std_models});
    for (const auto& s : ctx.model_strings) {
        CompositeModel with = std_models;
        with.components.push_back(model_for(parse_collapse_model(s), sphere));
        stacks.push_back({s, with});
    }

    json summary;
    summary["x_f_m"] = x_f;
    summary["t1_s"] = plan.t1;
    summary["t2_s"] = plan.t2;
    summary["d_m"] = plan.d;
    summary["sigma_m"] = plan.sigma;
    summary["sigma_d_m"] = plan.sigma_d;
    json jstacks = json::array();

    std::optional<double> reference;
    for (const auto& stack : stacks) {
        const PatternGrid pattern = simulate_pattern(plan, sphere, trap, stack.models, phi_total);
        const auto contrast = extract_visibility(pattern, x_f);
        if (stack.label == "standard" && contrast) reference = contrast;

        std::ostringstream csv;
        csv << "# command=interfere\n";
        csv << "# model_stack=" << stack.label << "\n";
        csv << "# d_m=" << fmt17(plan.d) << " t1_s=" << fmt17(plan.t1)
            << " t2_s=" << fmt17(plan.t2) << " chi=" << fmt17(plan.chi) << "\n";
        csv << "# x_f_m=" << fmt17(x_f) << "\n";
        csv << "# contrast=" << (contrast ? fmt17(*contrast) : "none") << "\n";
        csv << "x_m,probability_density_per_m\n";
        for (std::size_t i = 0; i < pattern.size(); ++i) {
            csv << fmt17(pattern.axis(i)) << "," << fmt17(pattern.amp[i].real()) << "\n";
        }
        std::string name = "pattern_" + stack.label + ".csv";
        std::replace(name.begin(), name.end(), ':', '_');
        std::replace(name.begin(), name.end(), '=', '_');
        ctx.write_file(name, csv.str());

        json j;
        j["label"] = stack.label;
        j["contrast"] = contrast ? json(*contrast) : json();
        if (contrast && reference && *reference > 0.0) {
            j["visibility_vs_standard"] = *contrast / *reference;
        }
        jstacks.push_back(j);
    }
    summary["stacks"] = jstacks;
    ctx.write_file("interfere_summary.json", summary.dump(2) + "\n");
    out << summary.dump(2) << "\n";
    return 0;
}

// ------------------------------------------------------------- optomech ----

int cmd_optomech(RunContext& ctx, double dmin_m, double dmax_m, int samples, std::ostream& out) {
    if (!(dmin_m > 0.0) || !(dmax_m > dmin_m) || samples < 2) {
        throw DomainError("optomech: need 0 < --dmin-nm < --dmax-nm and >= 2 samples");
    }
    const auto cavity = ctx.cavity();
    const auto trap = ctx.trap();

    std::ostringstream csv;
    csv << "D_m,g0_per_s,kappa_per_s,gamma0_sc_per_s,t1_om_s,t1_branch,chi_max,chi_branch\n";
    for (int i = 0; i < samples; ++i) {
        const double D =
            dmin_m * std::pow(dmax_m / dmin_m, static_cast<double>(i) / (samples - 1));
        const auto sphere = ctx.sphere(D);
        const auto b = optomech_bounds(sphere, cavity, trap);
        csv << fmt17(D) << "," << fmt17(b.g0) << "," << fmt17(b.kappa) << ","
            << fmt17(b.gamma0_sc) << "," << fmt17(b.t1_om) << "," << to_string(b.t1_branch)
            << "," << fmt17(b.chi_max) << "," << to_string(b.chi_branch) << "\n";
    }
    ctx.write_file("optomech.csv", csv.str());
    out << csv.str();
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunContext ctx;

    CLI::App app{"MERID feasibility calculator: decoherence rates, coherence lengths, "
                 "d-vs-D diagrams, interference patterns, readout bounds"};
    app.set_version_flag("--version", std::string("merid ") + kVersion);
    app.require_subcommand(1);
    app.fallthrough();   // global options may follow the subcommand

    std::string config_path;
    std::vector<std::string> sets;
    std::string models_csv;
    double d_nm = 30.0;
    double diameter_nm = 100.0;
    double pressure_torr = ctx.scenario.pressure_torr;
    double tint_k = ctx.scenario.T_internal;
    double chi = ctx.scenario.chi;

    app.add_option("--config", config_path, "Parameter file (flat JSON)");
    app.add_option("--set", sets,
                   "Override key=value (table keys, pressure_torr/T_internal/chi, "
                   "t1_gamma_max/t2_gamma_max/phase_max)");
    app.add_option("--out", ctx.out_dir, "Output directory");
    app.add_option("--models", models_csv,
                   "Comma-separated collapse models: csl|csl:adler=<mult>|qg|dp|dp-micro:r0=<nm>|k");
    app.add_option("--d-nm", d_nm, "Slit separation in nm");
    app.add_option("--diameter-nm", diameter_nm, "Sphere diameter in nm");
    app.add_option("--pressure-torr", pressure_torr, "Gas pressure in Torr");
    app.add_option("--tint-k", tint_k, "Sphere bulk temperature in K");
    app.add_option("--chi", chi, "Measurement strength");

    auto* rates = app.add_subcommand("rates", "gamma, a, Lambda per decoherence source");

    auto* coherence = app.add_subcommand("coherence", "xi(t) and xi_s(t) curves with extremum");
    double t_lo = 1e-5, t_hi = 10.0;
    int coh_points = 200;
    coherence->add_option("--tmin-s", t_lo, "Start of the time grid, s");
    coherence->add_option("--tmax-s", t_hi, "End of the time grid, s");
    coherence->add_option("--points", coh_points, "Grid points (log-spaced)");

    auto* diagram = app.add_subcommand("diagram", "d-vs-D feasibility diagram");
    double dia_lo_nm = 100.0, dia_hi_nm = 1000.0;
    int dia_samples = 0;   // 0 -> 64 per decade
    diagram->add_option("--dmin-nm", dia_lo_nm, "Smallest diameter, nm");
    diagram->add_option("--dmax-nm", dia_hi_nm, "Largest diameter, nm");
    diagram->add_option("--samples", dia_samples, "Diameter samples (default 64 per decade)");

    auto* interfere = app.add_subcommand("interfere", "Simulated interference patterns");
    double t2_s = -1.0;
    double phi_total = 0.0;
    interfere->add_option("--t2-s", t2_s, "Override the second time of flight, s");
    interfere->add_option("--phi", phi_total, "Residual quadratic phase phi_ds + phi_tof");

    auto* optomech = app.add_subcommand("optomech", "t1 and chi bounds of the cavity readout");
    double om_lo_nm = 20.0, om_hi_nm = 200.0;
    int om_samples = 64;
    optomech->add_option("--dmin-nm", om_lo_nm, "Smallest diameter, nm");
    optomech->add_option("--dmax-nm", om_hi_nm, "Largest diameter, nm");
    optomech->add_option("--samples", om_samples, "Diameter samples");

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {   // --help / --version
            app.exit(e, out, err);
            return 0;
        }
        app.exit(e, out, err);
        return 2;
    }

    try {
        // precedence: built-in defaults < config file < --set < dedicated flags
        if (!config_path.empty()) ctx.table = load_parameter_set(config_path);
        for (const auto& kv : sets) apply_set(ctx, kv);
        if (app.count("--pressure-torr")) ctx.scenario.pressure_torr = pressure_torr;
        if (app.count("--tint-k")) ctx.scenario.T_internal = tint_k;
        if (app.count("--chi")) ctx.scenario.chi = chi;
        if (!models_csv.empty()) {
            std::stringstream ss(models_csv);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (!item.empty()) ctx.model_strings.push_back(item);
            }
        }

        int rc = 0;
        if (rates->parsed()) {
            ctx.command = "rates";
            if (ctx.model_strings.empty()) ctx.model_strings = {"csl", "qg", "dp", "k"};
            ctx.args = {{"diameter_nm", diameter_nm}};
            rc = cmd_rates(ctx, diameter_nm * 1e-9, out);
        } else if (coherence->parsed()) {
            ctx.command = "coherence";
            ctx.args = {{"diameter_nm", diameter_nm}, {"tmin_s", t_lo}, {"tmax_s", t_hi},
                        {"points", coh_points}};
            rc = cmd_coherence(ctx, diameter_nm * 1e-9, t_lo, t_hi, coh_points, out);
        } else if (diagram->parsed()) {
            ctx.command = "diagram";
            ctx.args = {{"dmin_nm", dia_lo_nm}, {"dmax_nm", dia_hi_nm}, {"samples", dia_samples}};
            rc = cmd_diagram(ctx, dia_lo_nm * 1e-9, dia_hi_nm * 1e-9, dia_samples, out);
        } else if (interfere->parsed()) {
            ctx.command = "interfere";
            ctx.args = {{"diameter_nm", diameter_nm}, {"d_nm", d_nm}, {"phi", phi_total}};
            std::optional<double> t2;
            if (t2_s > 0.0) t2 = t2_s;
            rc = cmd_interfere(ctx, diameter_nm * 1e-9, d_nm * 1e-9, t2, phi_total, out);
        } else if (optomech->parsed()) {
            ctx.command = "optomech";
            ctx.args = {{"dmin_nm", om_lo_nm}, {"dmax_nm", om_hi_nm}, {"samples", om_samples}};
            rc = cmd_optomech(ctx, om_lo_nm * 1e-9, om_hi_nm * 1e-9, om_samples, out);
        }
        ctx.write_manifest();
        return rc;
    } catch (const DomainError& e) {
        err << "precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace merid::cli
