#include "rumor/invariants.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace rumor {
namespace {

double halton(std::uint64_t index, std::uint64_t base) {
    double f = 1.0;
    double r = 0.0;
    while (index > 0) {
        f /= static_cast<double>(base);
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

// Low-discrepancy point in the shrunken triangle
// {u,v >= kDomainFloor, u+v <= 1 - kDomainFloor}.
Vec2 triangle_point(std::uint64_t index) {
    double u = halton(index, 2);
    double v = halton(index, 3);
    if (u + v > 1.0) {
        u = 1.0 - u;
        v = 1.0 - v;
    }
    const double m = kDomainFloor;
    return {m + u * (1.0 - 3.0 * m), m + v * (1.0 - 3.0 * m)};
}

} // namespace

double hamiltonian_piqueira(const Params& p, const State2& y) {
    validate_params(p);
    check_finite(y);
    if (y.i <= 0.0) throw SingularityError("hamiltonian_piqueira: I must be > 0");
    return y.r / p.rho1 + std::log(y.i) / p.rho2 - y.i / p.rho2;
}

double hamiltonian_bp(BpVariant variant, double i, double s) {
    if (!(std::isfinite(i) && std::isfinite(s)))
        throw InvalidStateError("hamiltonian_bp: non-finite input");
    if (i <= 0.0) throw SingularityError("hamiltonian_bp: I must be > 0");
    if (variant == BpVariant::Paper) return std::log(i) - 2.0 * i + s;
    return s + 2.0 * i - std::log(i);
}

FirstIntegral FirstIntegral::piqueira(const Params& p) {
    validate_params(p);
    return FirstIntegral{IntegralId::PiqueiraH, p};
}

FirstIntegral FirstIntegral::belen_pearce(BpVariant variant) {
    return FirstIntegral{variant == BpVariant::Paper ? IntegralId::BelenPearcePaperH
                                                     : IntegralId::BelenPearceCorrectedH,
                         std::nullopt};
}

double FirstIntegral::eval(const State3& x) const {
    if (x.i <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    switch (id) {
        case IntegralId::PiqueiraH:
            return x.r / params->rho1 + std::log(x.i) / params->rho2 - x.i / params->rho2;
        case IntegralId::BelenPearcePaperH:
            return std::log(x.i) - 2.0 * x.i + x.s;
        case IntegralId::BelenPearceCorrectedH:
            return x.s + 2.0 * x.i - std::log(x.i);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

FirstIntegral integral_for(ModelId model, const Params& p) {
    if (model == ModelId::Piqueira3 || model == ModelId::PiqueiraPlanar)
        return FirstIntegral::piqueira(p);
    return FirstIntegral::belen_pearce(BpVariant::Corrected);
}

ConservationReport verify_first_integral(const PlanarField& field, const PlanarScalar& candidate,
                                         int samples, double tol, std::uint64_t seed) {
    if (samples < 1) throw DomainError("verify_first_integral: samples must be >= 1");
    if (!(tol > 0.0)) throw DomainError("verify_first_integral: tol must be > 0");

    const std::uint64_t offset = seed * 1000003ull + 1ull;
    double max_res = 0.0;
    double sum_res = 0.0;
    for (int n = 0; n < samples; ++n) {
        const Vec2 pt = triangle_point(offset + static_cast<std::uint64_t>(n));
        const double h = kFdStep;
        const double c_xp = candidate({pt[0] + h, pt[1]});
        const double c_xm = candidate({pt[0] - h, pt[1]});
        const double c_yp = candidate({pt[0], pt[1] + h});
        const double c_ym = candidate({pt[0], pt[1] - h});
        if (!(std::isfinite(c_xp) && std::isfinite(c_xm) && std::isfinite(c_yp) &&
              std::isfinite(c_ym)))
            throw EvaluationError("candidate non-finite near (" + std::to_string(pt[0]) + ", " +
                                  std::to_string(pt[1]) + ")");
        const double gx = (c_xp - c_xm) / (2.0 * h);
        const double gy = (c_yp - c_ym) / (2.0 * h);
        const Vec2 f = field(pt);
        const double res = std::abs(gx * f[0] + gy * f[1]);
        if (res > max_res) max_res = res;
        sum_res += res;
    }
    ConservationReport report;
    report.max_abs_residual = max_res;
    report.mean_abs_residual = sum_res / static_cast<double>(samples);
    report.sample_count = samples;
    report.verdict = max_res <= tol ? Verdict::Conserved : Verdict::NotConserved;
    return report;
}

DriftReport drift_along(const Trajectory& traj, const FirstIntegral& integral) {
    if (traj.states.empty()) throw DomainError("drift_along: empty trajectory");
    DriftReport report;
    const double h0 = integral.eval(traj.states.front());
    if (std::isnan(h0)) {
        report.truncated = true;
        return report;
    }
    for (const State3& st : traj.states) {
        const double v = integral.eval(st);
        if (std::isnan(v)) {
            report.truncated = true;
            break;
        }
        const double d = std::abs(v - h0);
        if (d > report.max_drift) report.max_drift = d;
        report.final_drift = d;
        ++report.samples;
    }
    return report;
}

} // namespace rumor
