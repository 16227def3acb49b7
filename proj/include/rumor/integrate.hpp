#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "rumor/types.hpp"

namespace rumor {

struct SimOptions {
    double step = 1e-3;
    double t_end = 100.0;
    double stop_s_below = 1e-10; // spreader-extinction threshold
    long record_every = 1;       // stride in steps
};

inline void validate_options(const SimOptions& o) {
    if (!(std::isfinite(o.step) && o.step > 0.0)) throw DomainError("step must be > 0");
    if (!(std::isfinite(o.t_end) && o.t_end >= o.step)) throw DomainError("t_end must be >= step");
    if (!(std::isfinite(o.stop_s_below) && o.stop_s_below >= 0.0))
        throw DomainError("stop_s_below must be >= 0");
    if (o.record_every < 1) throw DomainError("record_every must be >= 1");
}

enum class StopReason { HorizonReached, SpreaderExtinct, LeftDomain };

inline const char* to_string(StopReason r) {
    switch (r) {
        case StopReason::HorizonReached: return "HorizonReached";
        case StopReason::SpreaderExtinct: return "SpreaderExtinct";
        case StopReason::LeftDomain: return "LeftDomain";
    }
    return "?";
}

/// Recorded run. Planar runs are lifted to the simplex before recording.
/// h_values holds the registered first integral per recorded state (NaN where
/// the integral is singular, e.g. I = 0); empty when no integral applies.
struct Trajectory {
    std::vector<double> times;
    std::vector<State3> states;
    std::vector<double> h_values;
    StopReason stop_reason = StopReason::HorizonReached;
};

/// One classical RK4 update. Exact for identically-zero fields.
/// Throws BlowupError if any stage goes non-finite.
template <std::size_t N, typename Field>
std::array<double, N> rk4_step(Field&& field, const std::array<double, N>& x, double h) {
    auto guard = [](const std::array<double, N>& v) {
        for (double c : v)
            if (!std::isfinite(c)) throw BlowupError("non-finite RK4 stage");
        return v;
    };
    const auto k1 = guard(field(x));
    std::array<double, N> tmp;
    for (std::size_t j = 0; j < N; ++j) tmp[j] = x[j] + 0.5 * h * k1[j];
    const auto k2 = guard(field(tmp));
    for (std::size_t j = 0; j < N; ++j) tmp[j] = x[j] + 0.5 * h * k2[j];
    const auto k3 = guard(field(tmp));
    for (std::size_t j = 0; j < N; ++j) tmp[j] = x[j] + h * k3[j];
    const auto k4 = guard(field(tmp));
    std::array<double, N> out;
    for (std::size_t j = 0; j < N; ++j)
        out[j] = x[j] + (h / 6.0) * (k1[j] + 2.0 * (k2[j] + k3[j]) + k4[j]);
    return guard(out);
}

/// Fixed-step RK4 run of any model from a simplex state.
/// Planar models are reduced internally and lifted back for recording.
Trajectory simulate(ModelId model, const Params& p, const State3& x0, const SimOptions& opts);

/// Planar Piqueira run from a point of Omega.
Trajectory simulate_planar(const Params& p, const State2& y0, const SimOptions& opts);

} // namespace rumor
