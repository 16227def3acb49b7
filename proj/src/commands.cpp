#include "rumor/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <thread>

#include <json.hpp>

#include "rumor/csv.hpp"
#include "rumor/finalsize.hpp"
#include "rumor/invariants.hpp"
#include "rumor/models.hpp"
#include "rumor/stability.hpp"

namespace rumor {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::ofstream open_out(const fs::path& dir, const std::string& name) {
    fs::create_directories(dir);
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw ScenarioError("cannot write '" + (dir / name).string() + "'");
    return out;
}

bool wants(const Scenario& sc, const std::string& name) {
    return sc.outputs.empty() ||
           std::find(sc.outputs.begin(), sc.outputs.end(), name) != sc.outputs.end();
}

void write_trajectory_csv(std::ofstream& out, const Trajectory& traj) {
    out << "t,I,S,R,H,drift\n";
    const double h0 = traj.h_values.empty() ? std::numeric_limits<double>::quiet_NaN()
                                            : traj.h_values.front();
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        const State3& st = traj.states[k];
        const double hv = k < traj.h_values.size() ? traj.h_values[k]
                                                   : std::numeric_limits<double>::quiet_NaN();
        const double drift = std::isnan(hv) || std::isnan(h0)
                                 ? std::numeric_limits<double>::quiet_NaN()
                                 : std::abs(hv - h0);
        out << g17(traj.times[k]) << ',' << g17(st.i) << ',' << g17(st.s) << ',' << g17(st.r)
            << ',' << g17_or_blank(hv) << ',' << g17_or_blank(drift) << '\n';
    }
}

json params_json(const Params& p) {
    return json{{"rho1", p.rho1}, {"rho2", p.rho2}, {"mu", p.mu}};
}

double nan_to_null_guard(double v) { return v; }

json number_or_null(double v) {
    if (std::isnan(v)) return nullptr;
    return nan_to_null_guard(v);
}

} // namespace

int cmd_simulate(const Scenario& sc, const fs::path& out_dir) {
    const bool bp = sc.model == ModelId::BelenPearce3 || sc.model == ModelId::BelenPearcePlanar;
    const Trajectory traj = simulate(sc.model, sc.params, sc.init, sc.sim);
    const DriftReport drift = drift_along(traj, integral_for(sc.model, sc.params));

    std::vector<std::string> warnings = sc.warnings;
    double sigma = std::numeric_limits<double>::quiet_NaN();
    double i_inf = std::numeric_limits<double>::quiet_NaN();
    try {
        if (bp) {
            i_inf = final_ignorants_bp(sc.init.i, sc.init.s).i_inf;
        } else {
            sigma = threshold_sigma(sc.params);
            i_inf = final_ignorants(sc.params, State2{sc.init.r, sc.init.i}).i_inf;
        }
    } catch (const Error& e) {
        warnings.push_back(std::string("final-size prediction unavailable: ") + e.what());
    }

    const State3 last = traj.states.back();
    const double rel_gap = std::isnan(i_inf) || i_inf <= 0.0
                               ? std::numeric_limits<double>::quiet_NaN()
                               : std::abs(last.i - i_inf) / i_inf;

    if (wants(sc, "trajectory.csv")) {
        auto out = open_out(out_dir, "trajectory.csv");
        write_trajectory_csv(out, traj);
    }
    if (wants(sc, "summary.json")) {
        json doc{{"model", to_string(sc.model)},
                 {"params", params_json(sc.params)},
                 {"init", json{{"i", sc.init.i}, {"s", sc.init.s}, {"r", sc.init.r}}},
                 {"stop_reason", to_string(traj.stop_reason)},
                 {"t_final", traj.times.back()},
                 {"final_state", json{{"i", last.i}, {"s", last.s}, {"r", last.r}}},
                 {"max_drift", number_or_null(drift.max_drift)},
                 {"final_drift", number_or_null(drift.final_drift)},
                 {"sigma", number_or_null(sigma)},
                 {"i_inf_predicted", number_or_null(i_inf)},
                 {"i_terminal", last.i},
                 {"rel_gap", number_or_null(rel_gap)},
                 {"warnings", warnings}};
        open_out(out_dir, "summary.json") << doc.dump(2) << '\n';
    }
    return kExitOk;
}

int cmd_equilibria(const Params& p, int n, const fs::path& out_dir) {
    const double sigma = threshold_sigma(p);
    const auto scan = equilibrium_scan(p, n);

    auto csv = open_out(out_dir, "equilibria.csv");
    csv << "I,R,tau,class\n";
    json points = json::array();
    for (const EquilibriumReport& rep : scan) {
        csv << g17(rep.point.i) << ',' << g17(rep.point.r) << ',' << g17(rep.tau) << ','
            << to_string(rep.cls) << '\n';
        points.push_back(json{{"i", rep.point.i},
                              {"r", rep.point.r},
                              {"tau", rep.tau},
                              {"class", to_string(rep.cls)}});
    }
    json doc{{"params", params_json(p)}, {"sigma", sigma}, {"n", n}, {"points", points}};
    open_out(out_dir, "equilibria.json") << doc.dump(2) << '\n';
    return kExitOk;
}

int cmd_final_size(const Params& p, const State2& init, double tol, const fs::path& out_dir) {
    const double k = hamiltonian_piqueira(p, clamp_omega(init));
    const FinalState fsz = final_ignorants(p, init, tol);
    json doc{{"params", params_json(p)},
             {"init", json{{"r", init.r}, {"i", init.i}}},
             {"k", k},
             {"sigma", threshold_sigma(p)},
             {"i_inf", fsz.i_inf},
             {"r_inf", fsz.r_inf},
             {"bracket", json::array({fsz.bracket.first, fsz.bracket.second})},
             {"iterations", fsz.iterations},
             {"residual", fsz.residual}};
    open_out(out_dir, "final_size.json") << doc.dump(2) << '\n';
    return kExitOk;
}

int cmd_verify_integral(const std::string& model, const std::string& variant, const Params& p,
                        int samples, double tol, std::uint64_t seed, const fs::path& out_dir) {
    PlanarField field;
    PlanarScalar candidate;
    if (model == "piqueira") {
        if (!variant.empty() && variant != "eq4")
            throw ScenarioError("unknown variant '" + variant + "' for piqueira");
        validate_params(p);
        field = [p](const Vec2& y) { return planar_field(p, State2{y[0], y[1]}); };
        candidate = [p](const Vec2& y) { return hamiltonian_piqueira(p, State2{y[0], y[1]}); };
    } else if (model == "belen-pearce") {
        BpVariant v;
        if (variant == "paper")
            v = BpVariant::Paper;
        else if (variant == "corrected" || variant.empty())
            v = BpVariant::Corrected;
        else
            throw ScenarioError("unknown variant '" + variant + "' for belen-pearce");
        field = [](const Vec2& y) { return belen_pearce_planar(y[0], y[1]); };
        candidate = [v](const Vec2& y) { return hamiltonian_bp(v, y[0], y[1]); };
    } else {
        throw ScenarioError("unknown model '" + model + "' (use piqueira or belen-pearce)");
    }

    const ConservationReport rep = verify_first_integral(field, candidate, samples, tol, seed);
    json doc{{"model", model},
             {"variant", variant.empty() ? (model == "piqueira" ? "eq4" : "corrected") : variant},
             {"samples", samples},
             {"tol", tol},
             {"seed", seed},
             {"max_abs_residual", rep.max_abs_residual},
             {"mean_abs_residual", rep.mean_abs_residual},
             {"sample_count", rep.sample_count},
             {"verdict", to_string(rep.verdict)}};
    open_out(out_dir, "verify.json") << doc.dump(2) << '\n';
    return rep.verdict == Verdict::Conserved ? kExitOk : kExitNotConserved;
}

int cmd_phase_portrait(const Scenario& sc, const fs::path& out_dir) {
    validate_params(sc.params);
    if (sc.starts.empty()) throw ScenarioError("phase portrait needs at least one start");
    const double sigma = threshold_sigma(sc.params);

    json traj_files = json::array();
    int idx = 0;
    for (const State2& y0 : sc.starts) {
        const State2 y = clamp_omega(y0); // throws on starts outside Omega
        const Trajectory traj = simulate_planar(sc.params, y, sc.sim);
        char name[32];
        std::snprintf(name, sizeof(name), "trajectory_%02d.csv", idx);
        auto out = open_out(out_dir, name);
        write_trajectory_csv(out, traj);
        traj_files.push_back(json{{"file", name},
                                  {"start", json{{"r", y.r}, {"i", y.i}}},
                                  {"stop_reason", to_string(traj.stop_reason)},
                                  {"i_terminal", traj.states.back().i}});
        ++idx;
    }

    // Level curves over a uniform I grid in (0, 1].
    std::vector<double> grid;
    constexpr int kGridN = 400;
    for (int j = 1; j <= kGridN; ++j) grid.push_back(static_cast<double>(j) / kGridN);

    json level_files = json::array();
    idx = 0;
    for (double k : sc.levels) {
        const auto curve = level_curve(sc.params, k, grid);
        char name[32];
        std::snprintf(name, sizeof(name), "level_%02d.csv", idx);
        auto out = open_out(out_dir, name);
        out << "I,R,inside\n";
        for (const LevelPoint& pt : curve)
            out << g17(pt.i) << ',' << g17(pt.r) << ',' << (pt.inside ? 1 : 0) << '\n';
        level_files.push_back(json{{"file", name}, {"k", k}});
        ++idx;
    }

    json doc{{"params", params_json(sc.params)},
             {"sigma", sigma},
             {"trajectories", traj_files},
             {"levels", level_files},
             {"warnings", sc.warnings}};
    open_out(out_dir, "portrait.json") << doc.dump(2) << '\n';
    return kExitOk;
}

namespace {

struct SweepRow {
    Params p;
    double sigma = std::numeric_limits<double>::quiet_NaN();
    double i_inf = std::numeric_limits<double>::quiet_NaN();
    double i_t = std::numeric_limits<double>::quiet_NaN();
    double rel_gap = std::numeric_limits<double>::quiet_NaN();
    std::string error;
};

void run_cell(SweepRow& row, const State3& init, const SimOptions& sim) {
    try {
        row.sigma = threshold_sigma(row.p);
        row.i_inf = final_ignorants(row.p, State2{init.r, init.i}).i_inf;
        const Trajectory traj = simulate(ModelId::Piqueira3, row.p, init, sim);
        row.i_t = traj.states.back().i;
        if (row.i_inf > 0.0) row.rel_gap = std::abs(row.i_t - row.i_inf) / row.i_inf;
    } catch (const Error& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), ',', ';'); // keep the CSV well-formed
        row.error = msg;
    }
}

} // namespace

int cmd_sweep(const SweepSpec& spec, const fs::path& out_dir) {
    if (spec.rho1.empty() || spec.rho2.empty() || spec.mu.empty())
        throw ScenarioError("sweep needs nonempty rho1/rho2/mu lists");
    validate_options(spec.sim);
    const State3 init = clamp_simplex(spec.init);

    std::vector<SweepRow> rows;
    for (double r1 : spec.rho1)
        for (double r2 : spec.rho2)
            for (double m : spec.mu) rows.push_back(SweepRow{Params{r1, r2, m}});

    const int workers = std::clamp(spec.workers, 1, 64);
    if (workers == 1) {
        for (SweepRow& row : rows) run_cell(row, init, spec.sim);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> cursor{0};
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t j = cursor.fetch_add(1); j < rows.size();
                     j = cursor.fetch_add(1))
                    run_cell(rows[j], init, spec.sim);
            });
        for (std::thread& t : pool) t.join();
    }

    auto out = open_out(out_dir, "sweep.csv");
    out << "rho1,rho2,mu,I0,S0,R0,sigma,i_inf,i_T,rel_gap,error\n";
    std::size_t failures = 0;
    for (const SweepRow& row : rows) {
        out << g17(row.p.rho1) << ',' << g17(row.p.rho2) << ',' << g17(row.p.mu) << ','
            << g17(init.i) << ',' << g17(init.s) << ',' << g17(init.r) << ','
            << g17_or_blank(row.sigma) << ',' << g17_or_blank(row.i_inf) << ','
            << g17_or_blank(row.i_t) << ',' << g17_or_blank(row.rel_gap) << ',' << row.error
            << '\n';
        if (!row.error.empty()) ++failures;
    }
    return failures == rows.size() ? kExitIllPosed : kExitOk;
}

} // namespace rumor
