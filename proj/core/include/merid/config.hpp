#pragma once

#include <string>

#include "merid/constants.hpp"

namespace merid {

/// Flat JSON with one key per DefaultParameterSet field (complex entries as
/// _re/_im pairs). Unknown keys are rejected; absent keys keep defaults.
DefaultParameterSet load_parameter_set(const std::string& path);
DefaultParameterSet parameter_set_from_json_text(const std::string& text);

void save_parameter_set(const DefaultParameterSet& p, const std::string& path);
std::string parameter_set_to_json_text(const DefaultParameterSet& p);

/// Applies one "key=value" assignment (the config-file key names).
void apply_override(DefaultParameterSet& p, const std::string& key, double value);

}  // namespace merid
