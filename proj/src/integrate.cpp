#include "rumor/integrate.hpp"

#include <cmath>

#include "rumor/invariants.hpp"
#include "rumor/models.hpp"

namespace rumor {
namespace {

// Clamp policy after each step: components in [-kLeftDomainTol, 0) are
// roundoff/overshoot and snap to 0; anything lower means the scheme left the
// domain. 3D states are renormalized to keep |I+S+R-1| at machine precision
// over long horizons.
bool clamp_simplex_step(std::array<double, 3>& v) {
    for (double& c : v) {
        if (c < 0.0) {
            if (c < -kLeftDomainTol) return false;
            c = 0.0;
        }
    }
    const double sum = v[0] + v[1] + v[2];
    if (sum != 1.0) {
        v[0] /= sum;
        v[1] /= sum;
        v[2] /= sum;
    }
    return true;
}

bool clamp_triangle_step(std::array<double, 2>& v) {
    for (double& c : v) {
        if (c < 0.0) {
            if (c < -kLeftDomainTol) return false;
            c = 0.0;
        }
    }
    const double sum = v[0] + v[1];
    if (sum > 1.0) {
        if (sum > 1.0 + kLeftDomainTol) return false;
        v[0] /= sum;
        v[1] /= sum;
    }
    return true;
}

template <std::size_t N, typename Field, typename Spreader, typename ToState3, typename Clamp>
Trajectory run(Field&& field, Spreader&& spreader, ToState3&& to_state3, Clamp&& clamp,
               std::array<double, N> x, const SimOptions& opts, const FirstIntegral& integral) {
    Trajectory out;
    const double h = opts.step;
    const long long n_steps = static_cast<long long>(std::ceil(opts.t_end / h - 1e-9));

    auto record = [&](double t, const std::array<double, N>& v) {
        out.times.push_back(t);
        out.states.push_back(to_state3(v));
        out.h_values.push_back(integral.eval(out.states.back()));
    };

    record(0.0, x);
    long long k = 0;
    long long last_recorded = 0;
    out.stop_reason = StopReason::HorizonReached;

    while (true) {
        if (spreader(x) < opts.stop_s_below) {
            out.stop_reason = StopReason::SpreaderExtinct;
            break;
        }
        if (k == n_steps) break;
        auto next = rk4_step<N>(field, x, h);
        if (!clamp(next)) {
            out.stop_reason = StopReason::LeftDomain;
            break; // x stays at the last in-domain state
        }
        x = next;
        ++k;
        if (k % opts.record_every == 0 && k != n_steps) {
            record(static_cast<double>(k) * h, x);
            last_recorded = k;
        }
    }
    if (k != last_recorded) record(static_cast<double>(k) * h, x);
    return out;
}

} // namespace

Trajectory simulate(ModelId model, const Params& p, const State3& x0_raw, const SimOptions& opts) {
    validate_options(opts);
    const bool piqueira = model == ModelId::Piqueira3 || model == ModelId::PiqueiraPlanar;
    if (piqueira) validate_params(p);
    const State3 x0 = clamp_simplex(x0_raw);
    const FirstIntegral integral = integral_for(model, p);

    switch (model) {
        case ModelId::Piqueira3:
            return run<3>(
                [&p](const Vec3& v) { return piqueira_field(p, State3{v[0], v[1], v[2]}); },
                [](const Vec3& v) { return v[1]; },
                [](const Vec3& v) { return State3{v[0], v[1], v[2]}; }, clamp_simplex_step,
                Vec3{x0.i, x0.s, x0.r}, opts, integral);

        case ModelId::PiqueiraPlanar:
            // state ordered (R, I); S is implicit
            return run<2>(
                [&p](const Vec2& v) { return planar_field(p, State2{v[0], v[1]}); },
                [](const Vec2& v) { return 1.0 - v[0] - v[1]; },
                [](const Vec2& v) {
                    return State3{v[1], std::max(0.0, 1.0 - v[0] - v[1]), v[0]};
                },
                clamp_triangle_step, Vec2{x0.r, x0.i}, opts, integral);

        case ModelId::BelenPearce3:
            return run<3>(
                [](const Vec3& v) { return belen_pearce_field(State3{v[0], v[1], v[2]}); },
                [](const Vec3& v) { return v[1]; },
                [](const Vec3& v) { return State3{v[0], v[1], v[2]}; }, clamp_simplex_step,
                Vec3{x0.i, x0.s, x0.r}, opts, integral);

        case ModelId::BelenPearcePlanar:
            // state ordered (I, S); R is implicit
            return run<2>([](const Vec2& v) { return belen_pearce_planar(v[0], v[1]); },
                          [](const Vec2& v) { return v[1]; },
                          [](const Vec2& v) {
                              return State3{v[0], v[1], std::max(0.0, 1.0 - v[0] - v[1])};
                          },
                          clamp_triangle_step, Vec2{x0.i, x0.s}, opts, integral);
    }
    throw DomainError("unknown model");
}

Trajectory simulate_planar(const Params& p, const State2& y0, const SimOptions& opts) {
    return simulate(ModelId::PiqueiraPlanar, p, lift(clamp_omega(y0)), opts);
}

} // namespace rumor
