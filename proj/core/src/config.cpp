#include "merid/config.hpp"

#include <fstream>
#include <functional>
#include <map>

#include <json.hpp>

#include "merid/errors.hpp"

namespace merid {

namespace {

using Setter = std::function<void(DefaultParameterSet&, double)>;
using Getter = std::function<double(const DefaultParameterSet&)>;

const std::map<std::string, std::pair<Getter, Setter>>& field_table() {
    static const std::map<std::string, std::pair<Getter, Setter>> table = {
        {"density",
         {[](const DefaultParameterSet& p) { return p.density; },
          [](DefaultParameterSet& p, double v) { p.density = v; }}},
        {"eps_optical_re",
         {[](const DefaultParameterSet& p) { return p.eps_optical.real(); },
          [](DefaultParameterSet& p, double v) { p.eps_optical.real(v); }}},
        {"eps_optical_im",
         {[](const DefaultParameterSet& p) { return p.eps_optical.imag(); },
          [](DefaultParameterSet& p, double v) { p.eps_optical.imag(v); }}},
        {"omega",
         {[](const DefaultParameterSet& p) { return p.omega; },
          [](DefaultParameterSet& p, double v) { p.omega = v; }}},
        {"nbar",
         {[](const DefaultParameterSet& p) { return p.nbar; },
          [](DefaultParameterSet& p, double v) { p.nbar = v; }}},
        {"T_env",
         {[](const DefaultParameterSet& p) { return p.T_env; },
          [](DefaultParameterSet& p, double v) { p.T_env = v; }}},
        {"gas_mass_amu",
         {[](const DefaultParameterSet& p) { return p.gas_mass / consts::amu; },
          [](DefaultParameterSet& p, double v) { p.gas_mass = v * consts::amu; }}},
        {"eps_bb_re",
         {[](const DefaultParameterSet& p) { return p.eps_bb.real(); },
          [](DefaultParameterSet& p, double v) { p.eps_bb.real(v); }}},
        {"eps_bb_im",
         {[](const DefaultParameterSet& p) { return p.eps_bb.imag(); },
          [](DefaultParameterSet& p, double v) { p.eps_bb.imag(v); }}},
        {"delta_x",
         {[](const DefaultParameterSet& p) { return p.delta_x; },
          [](DefaultParameterSet& p, double v) { p.delta_x = v; }}},
        {"finesse",
         {[](const DefaultParameterSet& p) { return p.finesse; },
          [](DefaultParameterSet& p, double v) { p.finesse = v; }}},
        {"cavity_length",
         {[](const DefaultParameterSet& p) { return p.cavity_length; },
          [](DefaultParameterSet& p, double v) { p.cavity_length = v; }}},
        {"wavelength",
         {[](const DefaultParameterSet& p) { return p.wavelength; },
          [](DefaultParameterSet& p, double v) { p.wavelength = v; }}},
        {"waist",
         {[](const DefaultParameterSet& p) { return p.waist; },
          [](DefaultParameterSet& p, double v) { p.waist = v; }}},
    };
    return table;
}

}  // namespace

DefaultParameterSet parameter_set_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("config: JSON parse failed: ") + e.what());
    }
    if (!j.is_object()) throw DomainError("config: top level must be an object");

    DefaultParameterSet p;
    const auto& table = field_table();
    for (const auto& [key, value] : j.items()) {
        const auto it = table.find(key);
        if (it == table.end()) throw DomainError("config: unknown key '" + key + "'");
        if (!value.is_number()) throw DomainError("config: key '" + key + "' must be numeric");
        it->second.second(p, value.get<double>());
    }
    return p;
}

DefaultParameterSet load_parameter_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("config: cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parameter_set_from_json_text(text);
}

std::string parameter_set_to_json_text(const DefaultParameterSet& p) {
    nlohmann::json j;
    for (const auto& [key, fns] : field_table()) j[key] = fns.first(p);
    return j.dump(2) + "\n";
}

void save_parameter_set(const DefaultParameterSet& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DomainError("config: cannot write '" + path + "'");
    out << parameter_set_to_json_text(p);
}

void apply_override(DefaultParameterSet& p, const std::string& key, double value) {
    const auto& table = field_table();
    const auto it = table.find(key);
    if (it == table.end()) throw DomainError("config: unknown key '" + key + "'");
    it->second.second(p, value);
}

}  // namespace merid
