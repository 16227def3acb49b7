#pragma once

#include <vector>

#include "rumor/models.hpp"
#include "rumor/types.hpp"

namespace rumor {

// Equilibria can never be asymptotically stable here: every neighborhood of a
// point of the segment S = {R+I=1} contains other equilibria. The classifier
// therefore knows only these three verdicts.
enum class StabilityClass { Stable, Unstable, Marginal };

inline const char* to_string(StabilityClass c) {
    switch (c) {
        case StabilityClass::Stable: return "Stable";
        case StabilityClass::Unstable: return "Unstable";
        case StabilityClass::Marginal: return "Marginal";
    }
    return "?";
}

struct EquilibriumReport {
    State2 point;                      // (R, I) with R = 1 - I
    std::array<double, 2> eigen_planar; // {0, tau}
    std::array<double, 3> eigen_full;   // {0, 0, tau}
    StabilityClass cls = StabilityClass::Marginal;
    double tau = 0.0;                  // mu*((rho1+rho2)*I - rho1)
    double sigma = 0.0;
};

/// sigma = rho1/(rho1+rho2), the stability threshold on the equilibrium
/// segment. Independent of mu.
double threshold_sigma(const Params& p);

/// Classifies the equilibrium (R,I) = (1-i_star, i_star) by the sign of
/// tau = mu*((rho1+rho2)*i_star - rho1) against tie_tol.
EquilibriumReport classify_equilibrium(const Params& p, double i_star, double tie_tol = kTieTol);

/// Classifies n evenly spaced points I in {0, 1/(n-1), ..., 1} on the
/// equilibrium segment.
std::vector<EquilibriumReport> equilibrium_scan(const Params& p, int n);

/// Closed-form spectrum {0, 0, mu*((rho1+rho2)*i_star - rho1)} of the full
/// Jacobian at the equilibrium (i_star, 0, 1-i_star).
std::array<double, 3> eigen_full_at_equilibrium(const Params& p, double i_star);

/// Central-difference Jacobian of the 3D Piqueira field.
Matrix3 fd_jacobian3(const Params& p, const State3& x, double step = kFdStep);

/// Central-difference Jacobian of the planar Piqueira field.
Matrix2 fd_jacobian2(const Params& p, const State2& y, double step = kFdStep);

/// Max entrywise |analytic - fd| / (1 + |analytic|).
double max_rel_error(const Matrix3& analytic, const Matrix3& fd);
double max_rel_error(const Matrix2& analytic, const Matrix2& fd);

/// Analytic-vs-finite-difference agreement for the model's Jacobian at a
/// point, as max relative entry error. Piqueira3 checks jacobian3 against the
/// 3D field, PiqueiraPlanar checks jacobian2 against the planar field.
double jacobian_fd_check(ModelId model, const Params& p, const State3& point);

} // namespace rumor
