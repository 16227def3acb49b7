#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "rumor/integrate.hpp"
#include "rumor/types.hpp"

namespace rumor {

enum class IntegralId { PiqueiraH, BelenPearcePaperH, BelenPearceCorrectedH };

enum class BpVariant { Paper, Corrected };

/// H(R,I) = R/rho1 + log(I)/rho2 - I/rho2. Constant along planar Piqueira
/// orbits; mu rescales time only and does not appear.
double hamiltonian_piqueira(const Params& p, const State2& y);

/// Paper variant: log(I) - 2I + S (not conserved by the field; kept as a
/// negative control for the verifier). Corrected variant: S + 2I - log(I),
/// the function the planar Belen-Pearce flow actually preserves.
double hamiltonian_bp(BpVariant variant, double i, double s);

/// A first integral bound to its model; PiqueiraH requires params.
struct FirstIntegral {
    IntegralId id;
    std::optional<Params> params;

    static FirstIntegral piqueira(const Params& p);
    static FirstIntegral belen_pearce(BpVariant variant);

    /// Evaluates on a recorded simplex state (Piqueira reads (R,I), the
    /// Belen-Pearce variants read (I,S)).
    double eval(const State3& x) const;
};

enum class Verdict { Conserved, NotConserved };

inline const char* to_string(Verdict v) {
    return v == Verdict::Conserved ? "Conserved" : "NotConserved";
}

struct ConservationReport {
    double max_abs_residual = 0.0;
    double mean_abs_residual = 0.0;
    int sample_count = 0;
    Verdict verdict = Verdict::NotConserved;
};

using PlanarField = std::function<Vec2(const Vec2&)>;
using PlanarScalar = std::function<double(const Vec2&)>;

/// Checks d/dt candidate = grad(candidate) . field at quasi-random interior
/// points of the triangle {u,v >= kDomainFloor, u+v <= 1 - kDomainFloor}.
/// The gradient is taken by central differences with step kFdStep, so the
/// check is agnostic to what the candidate is. Deterministic for a fixed seed.
ConservationReport verify_first_integral(const PlanarField& field, const PlanarScalar& candidate,
                                         int samples, double tol, std::uint64_t seed = 0);

struct DriftReport {
    double max_drift = 0.0;
    double final_drift = 0.0;
    bool truncated = false;    // hit a state with I <= 0 before the end
    std::size_t samples = 0;   // recorded states actually used
};

/// Max and final |H(state) - H(state0)| over a trajectory's recorded states.
DriftReport drift_along(const Trajectory& traj, const FirstIntegral& integral);

/// The integral simulate() records for a model (corrected variant for
/// Belen-Pearce).
FirstIntegral integral_for(ModelId model, const Params& p);

} // namespace rumor
