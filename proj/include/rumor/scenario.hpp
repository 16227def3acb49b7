#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rumor/integrate.hpp"
#include "rumor/types.hpp"

namespace rumor {

/// A run description: model, rates, initial state, integration options, and
/// (for phase portraits) bundles of starts and level values.
struct Scenario {
    ModelId model = ModelId::Piqueira3;
    Params params{0.1, 0.9, 1.0};
    State3 init{};
    SimOptions sim{};
    std::vector<std::string> outputs;   // empty = command defaults
    std::vector<State2> starts;         // phase-portrait bundle
    std::vector<double> levels;         // phase-portrait level values
    bool renormalized = false;          // init did not sum to 1 and was rescaled
    std::vector<std::string> warnings;
};

ModelId parse_model(const std::string& name);

/// Parses a flat key-value JSON scenario file. Unknown keys are errors.
/// Off-simplex initial data with nonnegative components is renormalized with
/// a warning; negative components are rejected.
Scenario load_scenario_file(const std::filesystem::path& path);

/// Bundled example scenarios fig1..fig5.
Scenario canned_scenario(const std::string& name);

/// True if `name` refers to a bundled scenario rather than a file.
bool is_canned_name(const std::string& name);

/// Resolves --scenario values: canned name or path to a JSON file.
Scenario resolve_scenario(const std::string& spec);

/// Normalizes raw initial data onto the simplex, recording a warning on the
/// scenario when a rescale was needed.
void apply_init(Scenario& sc, double i0, double s0, double r0);

} // namespace rumor
