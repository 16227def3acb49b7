#include "rumor/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rumor/invariants.hpp"
#include "rumor/models.hpp"

namespace rumor {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

double parse_number(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ScenarioError(std::string("bad number for ") + what + ": '" + s + "'");
    }
}

std::vector<State2> parse_starts(const std::string& s) {
    std::vector<State2> out;
    for (const std::string& pair : split(s, ';')) {
        const auto parts = split(pair, ',');
        if (parts.size() != 2) throw ScenarioError("starts entries must be 'R,I' pairs");
        out.push_back(State2{parse_number(parts[0], "starts R"), parse_number(parts[1], "starts I")});
    }
    return out;
}

std::vector<double> parse_levels(const std::string& s) {
    std::vector<double> out;
    for (const std::string& item : split(s, ','))
        out.push_back(parse_number(item, "levels"));
    return out;
}

} // namespace

ModelId parse_model(const std::string& name) {
    if (name == "piqueira3") return ModelId::Piqueira3;
    if (name == "piqueira-planar") return ModelId::PiqueiraPlanar;
    if (name == "belen-pearce3") return ModelId::BelenPearce3;
    if (name == "belen-pearce-planar") return ModelId::BelenPearcePlanar;
    throw ScenarioError("unknown model '" + name + "'");
}

void apply_init(Scenario& sc, double i0, double s0, double r0) {
    if (!(std::isfinite(i0) && std::isfinite(s0) && std::isfinite(r0)))
        throw ScenarioError("initial data must be finite");
    for (double* c : {&i0, &s0, &r0}) {
        if (*c < 0.0) {
            if (*c < -kBoundaryTol) throw ScenarioError("initial data must be nonnegative");
            *c = 0.0;
        }
    }
    const double sum = i0 + s0 + r0;
    if (!(sum > 0.0)) throw ScenarioError("initial data sums to zero");
    if (std::abs(sum - 1.0) > kBoundaryTol) {
        sc.renormalized = true;
        sc.warnings.push_back("initial data sums to " + std::to_string(sum) +
                              "; renormalized onto the unit simplex");
        i0 /= sum;
        s0 /= sum;
        r0 /= sum;
    }
    sc.init = clamp_simplex(State3{i0, s0, r0});
}

Scenario load_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario file '" + path.string() + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ScenarioError("scenario parse error: " + std::string(e.what()));
    }
    if (!doc.is_object()) throw ScenarioError("scenario must be a JSON object");

    static const std::vector<std::string> known = {
        "model", "rho1", "rho2", "mu", "i0", "s0", "r0", "step", "t_end",
        "stop_s_below", "record_every", "outputs", "starts", "levels"};
    for (const auto& [key, _] : doc.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ScenarioError("unknown scenario key '" + key + "'");

    auto number = [&doc](const char* key, double fallback, bool* present = nullptr) {
        if (!doc.contains(key)) {
            if (present) *present = false;
            return fallback;
        }
        if (!doc[key].is_number()) throw ScenarioError(std::string(key) + " must be a number");
        if (present) *present = true;
        return doc[key].get<double>();
    };
    auto text = [&doc](const char* key) -> std::string {
        if (!doc[key].is_string()) throw ScenarioError(std::string(key) + " must be a string");
        return doc[key].get<std::string>();
    };

    Scenario sc;
    if (!doc.contains("model")) throw ScenarioError("scenario requires 'model'");
    sc.model = parse_model(text("model"));

    const bool bp = sc.model == ModelId::BelenPearce3 || sc.model == ModelId::BelenPearcePlanar;
    bool has_r1 = false;
    bool has_r2 = false;
    bool has_mu = false;
    sc.params.rho1 = number("rho1", 0.0, &has_r1);
    sc.params.rho2 = number("rho2", 0.0, &has_r2);
    sc.params.mu = number("mu", 1.0, &has_mu);
    if (bp) {
        if (has_r1 || has_r2 || has_mu)
            sc.warnings.push_back("rho1/rho2/mu are ignored for Belen-Pearce models");
        sc.params = Params{1.0, 1.0, 1.0};
    } else {
        if (!has_r1 || !has_r2) throw ScenarioError("scenario requires rho1 and rho2");
        validate_params(sc.params);
        if (probability_warning(sc.params))
            sc.warnings.push_back("rho1/rho2 above 1 are no longer probabilities");
    }

    if (!doc.contains("i0") || !doc.contains("r0"))
        throw ScenarioError("scenario requires i0 and r0 (s0 defaults to 1-i0-r0)");
    const double i0 = number("i0", 0.0);
    const double r0 = number("r0", 0.0);
    const double s0 = number("s0", 1.0 - i0 - r0);
    apply_init(sc, i0, s0, r0);

    sc.sim.step = number("step", 1e-3);
    sc.sim.t_end = number("t_end", 200.0);
    sc.sim.stop_s_below = number("stop_s_below", 1e-10);
    sc.sim.record_every = static_cast<long>(number("record_every", 100.0));
    validate_options(sc.sim);

    if (doc.contains("outputs")) sc.outputs = split(text("outputs"), ',');
    if (doc.contains("starts")) sc.starts = parse_starts(text("starts"));
    if (doc.contains("levels")) sc.levels = parse_levels(text("levels"));
    return sc;
}

bool is_canned_name(const std::string& name) {
    return name == "fig1" || name == "fig2" || name == "fig3" || name == "fig4" ||
           name == "fig5";
}

Scenario canned_scenario(const std::string& name) {
    Scenario sc;
    sc.sim = SimOptions{1e-3, 200.0, 1e-10, 100};
    if (name == "fig1") {
        sc.model = ModelId::Piqueira3;
        sc.params = Params{0.1, 0.9, 0.8};
        apply_init(sc, 0.9, 0.1, 0.0);
    } else if (name == "fig2") {
        sc.model = ModelId::Piqueira3;
        sc.params = Params{0.1, 0.9, 0.8};
        apply_init(sc, 0.4, 0.5, 0.1);
    } else if (name == "fig3") {
        sc.model = ModelId::Piqueira3;
        sc.params = Params{0.1, 0.9, 0.8};
        apply_init(sc, 0.84, 0.05, 0.1); // sums to 0.99; renormalized with a warning
    } else if (name == "fig4") {
        sc.model = ModelId::PiqueiraPlanar;
        sc.params = Params{0.4, 0.8, 1.0};
        sc.sim.t_end = 300.0;
        sc.starts = {State2{0.05, 0.90}, State2{0.10, 0.80}, State2{0.15, 0.70},
                     State2{0.20, 0.60}, State2{0.25, 0.50}};
        for (const State2& y : sc.starts)
            sc.levels.push_back(hamiltonian_piqueira(sc.params, y));
        const State3 first = lift(sc.starts.front());
        apply_init(sc, first.i, first.s, first.r);
    } else if (name == "fig5") {
        sc.model = ModelId::PiqueiraPlanar;
        sc.params = Params{0.4, 0.8, 1.0};
        apply_init(sc, 0.89, 0.0, 0.11); // on the equilibrium segment, above sigma
    } else {
        throw ScenarioError("unknown canned scenario '" + name + "'");
    }
    return sc;
}

Scenario resolve_scenario(const std::string& spec) {
    if (is_canned_name(spec)) return canned_scenario(spec);
    return load_scenario_file(spec);
}

} // namespace rumor
