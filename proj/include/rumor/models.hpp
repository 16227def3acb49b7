#pragma once

#include "rumor/types.hpp"

namespace rumor {

// Vector fields. Derivatives are plain arrays in the same component order as
// the state they came from: Deriv3 = (dI, dS, dR), planar Piqueira = (dR, dI),
// planar Belen-Pearce = (dI, dS).
//
// The unit-rate products are formed first and mu is applied as a single final
// factor, so field(p, x) == mu * field(p with mu=1, x) componentwise exactly,
// and the components cancel pairwise: dI + dS + dR == 0 up to one rounding.

/// dI = -rho2*mu*I*S, dS = rho2*mu*I*S - rho1*mu*S*(S+R), dR = rho1*mu*S*(S+R).
inline Vec3 piqueira_field(const Params& p, const State3& x) {
    check_finite(x);
    const double a = p.rho2 * x.i * x.s;           // infection-like term
    const double b = p.rho1 * x.s * (x.s + x.r);   // silencing term
    return {p.mu * (-a), p.mu * (a - b), p.mu * b};
}

/// Planar reduction on (R, I): dR = mu*rho1*(1-I-R)*(1-I), dI = -mu*rho2*I*(1-I-R).
/// The whole field carries mu so that lifting/reducing commutes with the 3D field.
inline Vec2 planar_field(const Params& p, const State2& y) {
    check_finite(y);
    const double s = 1.0 - y.i - y.r;
    const double cr = p.rho1 * s * (1.0 - y.i);
    const double ci = p.rho2 * y.i * s;
    return {p.mu * cr, p.mu * (-ci)};
}

/// Unit-rate variant: dI = -I*S, dS = -S*(1-2I), dR = S*(1-I).
inline Vec3 belen_pearce_field(const State3& x) {
    check_finite(x);
    const double a = x.i * x.s;
    const double w = x.s * (1.0 - x.i);
    // -S*(1-2I) == I*S - S*(1-I); writing it as a - w makes the components
    // cancel exactly when summed as (dI + dR) + dS.
    return {-a, a - w, w};
}

/// Planar unit-rate variant on (I, S): dI = -I*S, dS = -S*(1-2I).
inline Vec2 belen_pearce_planar(double i, double s) {
    if (!(std::isfinite(i) && std::isfinite(s)))
        throw InvalidStateError("non-finite state (I,S)");
    return {-i * s, -s * (1.0 - 2.0 * i)};
}

/// Lifts a planar state to the simplex via S = 1 - I - R.
inline State3 lift(const State2& y) {
    check_finite(y);
    double s = 1.0 - y.i - y.r;
    if (s < 0.0) {
        if (s < -kBoundaryTol) throw DomainError("lift: R+I exceeds 1");
        s = 0.0;
    }
    return {y.i, s, y.r};
}

/// Drops S. reduce(lift(y)) == y exactly.
inline State2 reduce(const State3& x) {
    check_finite(x);
    return {x.r, x.i};
}

/// Analytic Jacobian of piqueira_field, rows/cols ordered (I, S, R).
/// Every column sums to zero (population conservation).
inline Matrix3 jacobian3(const Params& p, const State3& x) {
    check_finite(x);
    const double m = p.mu;
    const double q = p.rho2 * x.i;                      // dS'/dI block entry /mu
    const double u = 2.0 * p.rho1 * x.s + p.rho1 * x.r; // dR'/dS entry /mu
    const double rs = p.rho2 * x.s;
    const double r1s = p.rho1 * x.s;
    return {{
        {m * (-rs), m * (-q), 0.0},
        {m * rs, m * (q - u), m * (-r1s)},
        {0.0, m * u, m * r1s},
    }};
}

/// Analytic Jacobian of planar_field, rows ordered (R, I).
/// On the equilibrium segment R+I=1 it degenerates to rank one with
/// nonzero eigenvalue mu*((rho1+rho2)*I - rho1).
inline Matrix2 jacobian2(const Params& p, const State2& y) {
    check_finite(y);
    const double m = p.mu;
    const double one_i = 1.0 - y.i;
    const double s = 1.0 - y.i - y.r;
    return {{
        {m * (-p.rho1 * one_i), m * (-p.rho1 * (one_i + s))},
        {m * (p.rho2 * y.i), m * (p.rho2 * (2.0 * y.i + y.r - 1.0))},
    }};
}

} // namespace rumor
