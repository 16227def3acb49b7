#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rumor/scenario.hpp"

namespace rumor {

// Process exit codes shared by the CLI and the command layer.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitIllPosed = 3;
inline constexpr int kExitBlowup = 4;
inline constexpr int kExitNotConserved = 5;

/// Runs the scenario and writes trajectory.csv (t,I,S,R,H,drift) and
/// summary.json under out_dir.
int cmd_simulate(const Scenario& sc, const std::filesystem::path& out_dir);

/// Writes equilibria.csv (I,R,tau,class) and equilibria.json for an n-point
/// scan of the equilibrium segment.
int cmd_equilibria(const Params& p, int n, const std::filesystem::path& out_dir);

/// Writes final_size.json for the level-set prediction from (r0, i0).
int cmd_final_size(const Params& p, const State2& init, double tol,
                   const std::filesystem::path& out_dir);

/// Writes verify.json; returns kExitNotConserved when the candidate fails.
/// model: "piqueira" (params required) or "belen-pearce" with variant
/// "paper" | "corrected".
int cmd_verify_integral(const std::string& model, const std::string& variant, const Params& p,
                        int samples, double tol, std::uint64_t seed,
                        const std::filesystem::path& out_dir);

/// Writes trajectory_NN.csv per start, level_NN.csv per level value, and
/// portrait.json with sigma for the threshold line.
int cmd_phase_portrait(const Scenario& sc, const std::filesystem::path& out_dir);

struct SweepSpec {
    std::vector<double> rho1;
    std::vector<double> rho2;
    std::vector<double> mu;
    State3 init{};
    SimOptions sim{1e-3, 1000.0, 1e-10, 100};
    int workers = 1;
};

/// Writes sweep.csv with one row per (rho1, rho2, mu) cell in lexicographic
/// grid order; the order and bytes are independent of the worker count.
int cmd_sweep(const SweepSpec& spec, const std::filesystem::path& out_dir);

} // namespace rumor
