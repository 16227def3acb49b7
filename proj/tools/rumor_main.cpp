#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rumor/commands.hpp"
#include "rumor/models.hpp"
#include "rumor/scenario.hpp"

namespace {

using rumor::Scenario;

struct CommonFlags {
    std::string scenario;
    std::string out_dir = ".";
    std::string model = "piqueira3";
    double rho1 = -1.0;
    double rho2 = -1.0;
    double mu = -1.0;
    double i0 = -1.0;
    double s0 = -1.0;
    double r0 = -1.0;
    double step = -1.0;
    double t_end = -1.0;
    long record_every = -1;
};

void add_override_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--scenario", f.scenario, "Scenario file or canned name fig1..fig5");
    cmd->add_option("--out", f.out_dir, "Output directory (default .)");
    cmd->add_option("--model", f.model,
                    "piqueira3 | piqueira-planar | belen-pearce3 | belen-pearce-planar");
    cmd->add_option("--rho1", f.rho1, "Spreader-silencing rate");
    cmd->add_option("--rho2", f.rho2, "Ignorant-conversion rate");
    cmd->add_option("--mu", f.mu, "Contact rate (time scale)");
    cmd->add_option("--i0", f.i0, "Initial Ignorant fraction");
    cmd->add_option("--s0", f.s0, "Initial Spreader fraction");
    cmd->add_option("--r0", f.r0, "Initial Stifler fraction");
    cmd->add_option("--step", f.step, "RK4 time step");
    cmd->add_option("--t-end", f.t_end, "Integration horizon");
    cmd->add_option("--record-every", f.record_every, "Recording stride in steps");
}

/// Builds the scenario from --scenario (if given) and applies flag overrides.
Scenario build_scenario(const CommonFlags& f, bool model_flag_given) {
    Scenario sc;
    if (!f.scenario.empty()) {
        sc = rumor::resolve_scenario(f.scenario);
        if (model_flag_given) sc.model = rumor::parse_model(f.model);
    } else {
        sc.model = rumor::parse_model(f.model);
        sc.params = rumor::Params{0.0, 0.0, 1.0};
        sc.sim = rumor::SimOptions{1e-3, 200.0, 1e-10, 100};
    }
    if (f.rho1 >= 0.0) sc.params.rho1 = f.rho1;
    if (f.rho2 >= 0.0) sc.params.rho2 = f.rho2;
    if (f.mu >= 0.0) sc.params.mu = f.mu;
    const bool bp =
        sc.model == rumor::ModelId::BelenPearce3 || sc.model == rumor::ModelId::BelenPearcePlanar;
    if (bp)
        sc.params = rumor::Params{1.0, 1.0, 1.0};
    else
        rumor::validate_params(sc.params);

    if (f.i0 >= 0.0 || f.s0 >= 0.0 || f.r0 >= 0.0) {
        double i0 = f.i0 >= 0.0 ? f.i0 : (f.scenario.empty() ? 0.0 : sc.init.i);
        double r0 = f.r0 >= 0.0 ? f.r0 : (f.scenario.empty() ? 0.0 : sc.init.r);
        double s0 = f.s0 >= 0.0 ? f.s0 : 1.0 - i0 - r0;
        sc.renormalized = false;
        rumor::apply_init(sc, i0, s0, r0);
    } else if (f.scenario.empty()) {
        throw rumor::ScenarioError("no initial state: pass --scenario or --i0/--s0/--r0");
    }
    if (f.step > 0.0) sc.sim.step = f.step;
    if (f.t_end > 0.0) sc.sim.t_end = f.t_end;
    if (f.record_every > 0) sc.sim.record_every = f.record_every;
    rumor::validate_options(sc.sim);
    return sc;
}

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw rumor::ScenarioError(std::string("bad value in ") + what + ": '" + item + "'");
        }
    }
    if (out.empty()) throw rumor::ScenarioError(std::string(what) + " list is empty");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ignorant-Spreader-Stifler rumor model toolkit"};
    app.require_subcommand(1);

    CommonFlags sim_f;
    auto* sim_cmd = app.add_subcommand("simulate", "Integrate a scenario and emit CSV/JSON");
    add_override_flags(sim_cmd, sim_f);

    CommonFlags eq_f;
    int eq_n = 101;
    auto* eq_cmd = app.add_subcommand("equilibria", "Scan and classify the equilibrium segment");
    add_override_flags(eq_cmd, eq_f);
    eq_cmd->add_option("--n", eq_n, "Number of scan points (>= 2)");

    CommonFlags fs_f;
    double fs_tol = 1e-12;
    auto* fs_cmd = app.add_subcommand("final-size", "Predict the asymptotic Ignorant fraction");
    add_override_flags(fs_cmd, fs_f);
    fs_cmd->add_option("--tol", fs_tol, "Residual tolerance on phi(I) - k");

    std::string vi_model = "piqueira";
    std::string vi_variant;
    CommonFlags vi_f;
    int vi_samples = 1000;
    double vi_tol = 1e-6;
    std::uint64_t vi_seed = 0;
    auto* vi_cmd = app.add_subcommand("verify-integral", "Check a first integral numerically");
    vi_cmd->add_option("--model", vi_model, "piqueira | belen-pearce");
    vi_cmd->add_option("--variant", vi_variant, "belen-pearce: paper | corrected");
    vi_cmd->add_option("--rho1", vi_f.rho1, "Spreader-silencing rate (piqueira)");
    vi_cmd->add_option("--rho2", vi_f.rho2, "Ignorant-conversion rate (piqueira)");
    vi_cmd->add_option("--mu", vi_f.mu, "Contact rate (piqueira)");
    vi_cmd->add_option("--samples", vi_samples, "Sample count (default 1000)");
    vi_cmd->add_option("--tol", vi_tol, "Residual tolerance (default 1e-6)");
    vi_cmd->add_option("--seed", vi_seed, "Sampler seed (default 0)");
    vi_cmd->add_option("--out", vi_f.out_dir, "Output directory");

    CommonFlags pp_f;
    std::vector<std::string> pp_starts;
    std::vector<double> pp_levels;
    auto* pp_cmd = app.add_subcommand("phase-portrait", "Trajectory and level-curve bundle");
    add_override_flags(pp_cmd, pp_f);
    pp_cmd->add_option("--start", pp_starts, "Planar start 'R,I' (repeatable)");
    pp_cmd->add_option("--level", pp_levels, "Level value k (repeatable)");

    std::string sw_rho1 = "0.1,0.4,0.8";
    std::string sw_rho2 = "0.1,0.4,0.8";
    std::string sw_mu = "1";
    CommonFlags sw_f;
    int sw_workers = 1;
    auto* sw_cmd = app.add_subcommand("sweep", "Grid of final-size predictions vs simulation");
    sw_cmd->add_option("--rho1", sw_rho1, "Comma-separated rho1 values");
    sw_cmd->add_option("--rho2", sw_rho2, "Comma-separated rho2 values");
    sw_cmd->add_option("--mu", sw_mu, "Comma-separated mu values");
    sw_cmd->add_option("--i0", sw_f.i0, "Initial Ignorant fraction")->required();
    sw_cmd->add_option("--s0", sw_f.s0, "Initial Spreader fraction");
    sw_cmd->add_option("--r0", sw_f.r0, "Initial Stifler fraction")->required();
    sw_cmd->add_option("--step", sw_f.step, "RK4 time step");
    sw_cmd->add_option("--t-end", sw_f.t_end, "Integration horizon");
    sw_cmd->add_option("--workers", sw_workers, "Worker threads (default 1)");
    sw_cmd->add_option("--out", sw_f.out_dir, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return rumor::kExitInvalidInput;
    }

    try {
        if (sim_cmd->parsed()) {
            const Scenario sc = build_scenario(sim_f, sim_cmd->count("--model") > 0);
            for (const std::string& w : sc.warnings) std::cerr << "warning: " << w << '\n';
            return rumor::cmd_simulate(sc, sim_f.out_dir);
        }
        if (eq_cmd->parsed()) {
            rumor::Params p{eq_f.rho1, eq_f.rho2, eq_f.mu > 0.0 ? eq_f.mu : 1.0};
            if (!eq_f.scenario.empty()) {
                const Scenario sc = rumor::resolve_scenario(eq_f.scenario);
                p = sc.params;
                if (eq_f.rho1 >= 0.0) p.rho1 = eq_f.rho1;
                if (eq_f.rho2 >= 0.0) p.rho2 = eq_f.rho2;
                if (eq_f.mu > 0.0) p.mu = eq_f.mu;
            }
            return rumor::cmd_equilibria(p, eq_n, eq_f.out_dir);
        }
        if (fs_cmd->parsed()) {
            const Scenario sc = build_scenario(fs_f, fs_cmd->count("--model") > 0);
            return rumor::cmd_final_size(sc.params, rumor::State2{sc.init.r, sc.init.i}, fs_tol,
                                         fs_f.out_dir);
        }
        if (vi_cmd->parsed()) {
            rumor::Params p{vi_f.rho1, vi_f.rho2, vi_f.mu > 0.0 ? vi_f.mu : 1.0};
            return rumor::cmd_verify_integral(vi_model, vi_variant, p, vi_samples, vi_tol,
                                              vi_seed, vi_f.out_dir);
        }
        if (pp_cmd->parsed()) {
            Scenario sc;
            if (!pp_f.scenario.empty()) {
                sc = rumor::resolve_scenario(pp_f.scenario);
            } else {
                sc.model = rumor::ModelId::PiqueiraPlanar;
                sc.sim = rumor::SimOptions{1e-3, 300.0, 1e-10, 100};
            }
            if (pp_f.rho1 >= 0.0) sc.params.rho1 = pp_f.rho1;
            if (pp_f.rho2 >= 0.0) sc.params.rho2 = pp_f.rho2;
            if (pp_f.mu > 0.0) sc.params.mu = pp_f.mu;
            if (pp_f.step > 0.0) sc.sim.step = pp_f.step;
            if (pp_f.t_end > 0.0) sc.sim.t_end = pp_f.t_end;
            if (pp_f.record_every > 0) sc.sim.record_every = pp_f.record_every;
            for (const std::string& s : pp_starts) {
                const auto comma = s.find(',');
                if (comma == std::string::npos)
                    throw rumor::ScenarioError("--start expects 'R,I'");
                sc.starts.push_back(rumor::State2{std::stod(s.substr(0, comma)),
                                                  std::stod(s.substr(comma + 1))});
            }
            if (!pp_levels.empty()) sc.levels = pp_levels;
            rumor::validate_options(sc.sim);
            return rumor::cmd_phase_portrait(sc, pp_f.out_dir);
        }
        if (sw_cmd->parsed()) {
            rumor::SweepSpec spec;
            spec.rho1 = parse_list(sw_rho1, "--rho1");
            spec.rho2 = parse_list(sw_rho2, "--rho2");
            spec.mu = parse_list(sw_mu, "--mu");
            const double s0 = sw_f.s0 >= 0.0 ? sw_f.s0 : 1.0 - sw_f.i0 - sw_f.r0;
            spec.init = rumor::State3{sw_f.i0, s0, sw_f.r0};
            if (sw_f.step > 0.0) spec.sim.step = sw_f.step;
            if (sw_f.t_end > 0.0) spec.sim.t_end = sw_f.t_end;
            spec.workers = sw_workers;
            return rumor::cmd_sweep(spec, sw_f.out_dir);
        }
    } catch (const rumor::UnstableStartError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return rumor::kExitIllPosed;
    } catch (const rumor::NoRootError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return rumor::kExitIllPosed;
    } catch (const rumor::BlowupError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return rumor::kExitBlowup;
    } catch (const rumor::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return rumor::kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return rumor::kExitInvalidInput;
    }
    return rumor::kExitOk;
}
