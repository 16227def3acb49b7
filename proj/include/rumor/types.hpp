#pragma once

#include <array>
#include <cmath>
#include <string>

#include "rumor/errors.hpp"

namespace rumor {

// Tolerances shared across modules.
inline constexpr double kBoundaryTol = 1e-12;   // clamp zone around simplex/omega boundary
inline constexpr double kLeftDomainTol = 1e-9;  // beyond this a trajectory has genuinely left
inline constexpr double kFdStep = 1e-6;         // central-difference step
inline constexpr double kDomainFloor = 1e-3;    // sampler floor keeping log(I) well conditioned
inline constexpr double kTieTol = 1e-12;        // |I - sigma| tie zone for Marginal

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;
using Matrix2 = std::array<std::array<double, 2>, 2>; // row-major
using Matrix3 = std::array<std::array<double, 3>, 3>; // row-major

/// Model rates. rho1/rho2 are per-contact probabilities, mu the contact rate.
struct Params {
    double rho1 = 0.0;
    double rho2 = 0.0;
    double mu = 1.0;
};

/// Full population triple (I, S, R) on the unit simplex I+S+R = 1.
struct State3 {
    double i = 0.0;
    double s = 0.0;
    double r = 0.0;
};

/// Reduced planar state (R, I) in the triangle Omega = {R,I >= 0, R+I <= 1}.
struct State2 {
    double r = 0.0;
    double i = 0.0;
};

enum class ModelId {
    Piqueira3,
    PiqueiraPlanar,
    BelenPearce3,
    BelenPearcePlanar,
};

inline bool is_planar(ModelId m) {
    return m == ModelId::PiqueiraPlanar || m == ModelId::BelenPearcePlanar;
}

inline const char* to_string(ModelId m) {
    switch (m) {
        case ModelId::Piqueira3: return "piqueira3";
        case ModelId::PiqueiraPlanar: return "piqueira-planar";
        case ModelId::BelenPearce3: return "belen-pearce3";
        case ModelId::BelenPearcePlanar: return "belen-pearce-planar";
    }
    return "?";
}

/// Validates rates. Values above 1 are accepted (they stop being probabilities,
/// the dynamics stay well defined); the caller may surface `probability_warning`.
inline void validate_params(const Params& p) {
    if (!(std::isfinite(p.rho1) && std::isfinite(p.rho2) && std::isfinite(p.mu)))
        throw DomainError("params must be finite");
    if (!(p.rho1 > 0.0 && p.rho2 > 0.0 && p.mu > 0.0))
        throw DomainError("params must be positive (rho1, rho2, mu > 0)");
}

inline bool probability_warning(const Params& p) {
    return p.rho1 > 1.0 || p.rho2 > 1.0;
}

inline void check_finite(const State3& x) {
    if (!(std::isfinite(x.i) && std::isfinite(x.s) && std::isfinite(x.r)))
        throw InvalidStateError("non-finite state (I,S,R)");
}

inline void check_finite(const State2& y) {
    if (!(std::isfinite(y.r) && std::isfinite(y.i)))
        throw InvalidStateError("non-finite state (R,I)");
}

/// Accepts states within kBoundaryTol of the simplex and returns the clamped,
/// renormalized representative. Farther violations are domain errors.
inline State3 clamp_simplex(State3 x) {
    check_finite(x);
    for (double* c : {&x.i, &x.s, &x.r}) {
        if (*c < 0.0) {
            if (*c < -kBoundaryTol) throw DomainError("state component below 0");
            *c = 0.0;
        }
    }
    const double sum = x.i + x.s + x.r;
    if (std::abs(sum - 1.0) > kBoundaryTol)
        throw DomainError("state does not sum to 1 (got " + std::to_string(sum) + ")");
    if (sum != 1.0) {
        x.i /= sum;
        x.s /= sum;
        x.r /= sum;
    }
    return x;
}

/// Same contract for Omega membership of a planar state.
inline State2 clamp_omega(State2 y) {
    check_finite(y);
    for (double* c : {&y.r, &y.i}) {
        if (*c < 0.0) {
            if (*c < -kBoundaryTol) throw DomainError("planar component below 0");
            *c = 0.0;
        }
    }
    const double sum = y.r + y.i;
    if (sum > 1.0) {
        if (sum > 1.0 + kBoundaryTol) throw DomainError("R+I exceeds 1");
        const double scale = 1.0 / sum;
        y.r *= scale;
        y.i *= scale;
    }
    return y;
}

} // namespace rumor
