#include "rumor/finalsize.hpp"

#include <algorithm>
#include <cmath>

#include "rumor/invariants.hpp"
#include "rumor/stability.hpp"

namespace rumor {
namespace {

constexpr double kBracketFloor = 1e-300;
constexpr int kMaxBisect = 2000;

struct Bisection {
    double root = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

// Bisects fn (monotone across the bracket) to |fn(root)| <= tol. The bracket
// must satisfy fn(lo) < 0 <= fn(hi) or fn(lo) > 0 >= fn(hi).
Bisection bisect(const std::function<double(double)>& fn, double lo, double hi, double tol) {
    double flo = fn(lo);
    Bisection best;
    best.root = lo;
    best.residual = std::abs(flo);
    auto consider = [&best](double x, double f) {
        if (std::abs(f) < best.residual) {
            best.root = x;
            best.residual = std::abs(f);
        }
    };
    consider(hi, fn(hi));
    for (int it = 0; it < kMaxBisect; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= std::min(lo, hi) || mid >= std::max(lo, hi)) break; // interval collapsed
        const double fm = fn(mid);
        best.iterations = it + 1;
        consider(mid, fm);
        if (std::abs(fm) <= tol) break;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return best;
}

} // namespace

LevelSet level_set(const Params& p, const State2& y0) {
    const State2 y = clamp_omega(y0);
    if (y.i <= 0.0) throw SingularityError("level_set: I0 must be > 0");
    return LevelSet{hamiltonian_piqueira(p, y), p};
}

FinalState final_ignorants(const Params& p, const State2& y0, double tol) {
    validate_params(p);
    if (!(tol > 0.0)) throw DomainError("final_ignorants: tol must be > 0");
    const State2 y = clamp_omega(y0);
    if (y.i <= 0.0) throw SingularityError("final_ignorants: I0 must be > 0");

    const double sigma = threshold_sigma(p);
    if (y.r + y.i >= 1.0 - kBoundaryTol) {
        // Degenerate start on the equilibrium segment: constant flow.
        if (y.i <= sigma)
            return FinalState{y.i, 1.0 - y.i, {y.i, y.i}, 0, 0.0};
        throw UnstableStartError("final_ignorants: start lies on the unstable part of the "
                                 "equilibrium segment (I0 > sigma); the limit is ill-posed");
    }

    const double k = hamiltonian_piqueira(p, y);
    auto phi = [&p](double i) {
        return (1.0 - i) / p.rho1 + std::log(i) / p.rho2 - i / p.rho2;
    };
    auto fn = [&](double i) { return phi(i) - k; };

    // phi is strictly increasing on (0, sigma) and -> -inf as I -> 0+, so a
    // downward geometric scan always finds the negative end of the bracket.
    const double hi = sigma * (1.0 - 1e-9);
    double lo = std::min(y.i, 0.5 * sigma);
    while (fn(lo) >= 0.0) {
        lo /= 10.0;
        if (lo < kBracketFloor)
            throw NoRootError("final_ignorants: no sign change above the bracket floor");
    }
    if (fn(hi) < 0.0)
        throw NoRootError("final_ignorants: phi(sigma) below the level value"); // unreachable
                                                                                // for interior y0
    const Bisection b = bisect(fn, lo, hi, tol);
    if (b.residual > tol)
        throw NoRootError("final_ignorants: bisection stalled above tolerance");
    return FinalState{b.root, 1.0 - b.root, {lo, hi}, b.iterations, b.residual};
}

FinalState final_ignorants_bp(double i0, double s0, double tol) {
    if (!(std::isfinite(i0) && std::isfinite(s0)))
        throw InvalidStateError("final_ignorants_bp: non-finite input");
    if (!(tol > 0.0)) throw DomainError("final_ignorants_bp: tol must be > 0");
    if (i0 <= 0.0) throw SingularityError("final_ignorants_bp: I0 must be > 0");
    if (s0 < 0.0 || i0 + s0 > 1.0 + kBoundaryTol)
        throw DomainError("final_ignorants_bp: require S0 >= 0 and I0+S0 <= 1");

    const double c = s0 + 2.0 * i0 - std::log(i0);
    // psi(I) = 2I - log(I) is strictly decreasing on (0, 1/2); psi -> +inf as
    // I -> 0+ and psi(1/2) = 1 + log 2 <= c, so the bracket always closes.
    auto fn = [c](double i) { return 2.0 * i - std::log(i) - c; };
    const double hi = 0.5;
    if (fn(hi) > 0.0) throw NoRootError("final_ignorants_bp: no root at or below 1/2");
    double lo = std::min(i0, 0.25);
    while (fn(lo) <= 0.0) {
        lo /= 10.0;
        if (lo < kBracketFloor)
            throw NoRootError("final_ignorants_bp: no sign change above the bracket floor");
    }
    const Bisection b = bisect(fn, lo, hi, tol);
    if (b.residual > tol) throw NoRootError("final_ignorants_bp: bisection stalled above tolerance");
    return FinalState{b.root, 1.0 - b.root, {lo, hi}, b.iterations, b.residual};
}

std::vector<LevelPoint> level_curve(const Params& p, double k, const std::vector<double>& i_grid) {
    validate_params(p);
    if (!std::isfinite(k)) throw DomainError("level_curve: k must be finite");
    std::vector<LevelPoint> out;
    out.reserve(i_grid.size());
    for (double i : i_grid) {
        if (!(std::isfinite(i) && i > 0.0 && i <= 1.0))
            throw DomainError("level_curve: grid values must lie in (0, 1]");
        const double r = p.rho1 * (k - std::log(i) / p.rho2 + i / p.rho2);
        out.push_back(LevelPoint{r, i, r >= 0.0 && r <= 1.0 - i});
    }
    return out;
}

} // namespace rumor
