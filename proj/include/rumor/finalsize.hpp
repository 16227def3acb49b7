#pragma once

#include <utility>
#include <vector>

#include "rumor/types.hpp"

namespace rumor {

/// A level line H(R,I) = k of the Piqueira first integral.
struct LevelSet {
    double k = 0.0;
    Params params;
};

/// k = H(R0, I0) for an interior initial state.
LevelSet level_set(const Params& p, const State2& y0);

struct FinalState {
    double i_inf = 0.0;
    double r_inf = 0.0;                  // 1 - i_inf
    std::pair<double, double> bracket{0.0, 0.0};
    int iterations = 0;
    double residual = 0.0;               // |phi(i_inf) - k|
};

/// Asymptotic Ignorant fraction without integrating: the unique root of
/// phi(I) = (1-I)/rho1 + log(I)/rho2 - I/rho2 = H(R0, I0) in (0, sigma),
/// found by bisection on a verified sign-change bracket. phi is strictly
/// increasing there and diverges to -inf as I -> 0+, so the bracket always
/// exists for interior starts. Starts already on the equilibrium segment are
/// answered directly when stable (I0 <= sigma) and rejected when unstable.
/// tol bounds the phi-residual, not the interval width; phi is nearly flat
/// next to sigma, where an interval tolerance would be misleading.
FinalState final_ignorants(const Params& p, const State2& y0, double tol = 1e-12);

/// Belen-Pearce counterpart: the root of 2I - log(I) = S0 + 2I0 - log(I0)
/// in (0, 1/2), the Ignorant fraction left when the spreaders die out.
FinalState final_ignorants_bp(double i0, double s0, double tol = 1e-12);

struct LevelPoint {
    double r = 0.0;
    double i = 0.0;
    bool inside = true; // R in [0, 1-I]; clipped points are still returned
};

/// Explicit level curve R(I) = rho1*(k - log(I)/rho2 + I/rho2) over a grid of
/// I values in (0, 1].
std::vector<LevelPoint> level_curve(const Params& p, double k, const std::vector<double>& i_grid);

} // namespace rumor
