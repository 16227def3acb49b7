#include "rumor/stability.hpp"

#include <cmath>

namespace rumor {
namespace {

template <typename M>
double max_rel_error_impl(const M& analytic, const M& fd) {
    double worst = 0.0;
    for (std::size_t r = 0; r < analytic.size(); ++r)
        for (std::size_t c = 0; c < analytic[r].size(); ++c) {
            const double e =
                std::abs(analytic[r][c] - fd[r][c]) / (1.0 + std::abs(analytic[r][c]));
            if (e > worst) worst = e;
        }
    return worst;
}

} // namespace

double threshold_sigma(const Params& p) {
    validate_params(p);
    return p.rho1 / (p.rho1 + p.rho2);
}

EquilibriumReport classify_equilibrium(const Params& p, double i_star, double tie_tol) {
    validate_params(p);
    if (!(std::isfinite(i_star) && i_star >= 0.0 && i_star <= 1.0))
        throw DomainError("classify_equilibrium: I must lie in [0,1]");
    if (!(tie_tol >= 0.0)) throw DomainError("classify_equilibrium: tie_tol must be >= 0");

    const double tau = p.mu * ((p.rho1 + p.rho2) * i_star - p.rho1);
    EquilibriumReport rep;
    rep.point = State2{1.0 - i_star, i_star};
    rep.tau = tau;
    rep.eigen_planar = {0.0, tau};
    rep.eigen_full = {0.0, 0.0, tau};
    rep.sigma = threshold_sigma(p);
    if (tau < -tie_tol)
        rep.cls = StabilityClass::Stable;
    else if (tau > tie_tol)
        rep.cls = StabilityClass::Unstable;
    else
        rep.cls = StabilityClass::Marginal;
    return rep;
}

std::vector<EquilibriumReport> equilibrium_scan(const Params& p, int n) {
    if (n < 2) throw DomainError("equilibrium_scan: n must be >= 2");
    std::vector<EquilibriumReport> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        out.push_back(classify_equilibrium(p, static_cast<double>(k) / (n - 1)));
    return out;
}

std::array<double, 3> eigen_full_at_equilibrium(const Params& p, double i_star) {
    return classify_equilibrium(p, i_star).eigen_full;
}

Matrix3 fd_jacobian3(const Params& p, const State3& x, double step) {
    Matrix3 j{};
    for (int c = 0; c < 3; ++c) {
        State3 plus = x;
        State3 minus = x;
        double* pc = c == 0 ? &plus.i : c == 1 ? &plus.s : &plus.r;
        double* mc = c == 0 ? &minus.i : c == 1 ? &minus.s : &minus.r;
        *pc += step;
        *mc -= step;
        const Vec3 fp = piqueira_field(p, plus);
        const Vec3 fm = piqueira_field(p, minus);
        for (int r = 0; r < 3; ++r) j[r][c] = (fp[r] - fm[r]) / (2.0 * step);
    }
    return j;
}

Matrix2 fd_jacobian2(const Params& p, const State2& y, double step) {
    Matrix2 j{};
    for (int c = 0; c < 2; ++c) {
        State2 plus = y;
        State2 minus = y;
        double* pc = c == 0 ? &plus.r : &plus.i;
        double* mc = c == 0 ? &minus.r : &minus.i;
        *pc += step;
        *mc -= step;
        const Vec2 fp = planar_field(p, plus);
        const Vec2 fm = planar_field(p, minus);
        for (int r = 0; r < 2; ++r) j[r][c] = (fp[r] - fm[r]) / (2.0 * step);
    }
    return j;
}

double max_rel_error(const Matrix3& analytic, const Matrix3& fd) {
    return max_rel_error_impl(analytic, fd);
}

double max_rel_error(const Matrix2& analytic, const Matrix2& fd) {
    return max_rel_error_impl(analytic, fd);
}

double jacobian_fd_check(ModelId model, const Params& p, const State3& point) {
    switch (model) {
        case ModelId::Piqueira3:
            return max_rel_error(jacobian3(p, point), fd_jacobian3(p, point));
        case ModelId::PiqueiraPlanar: {
            const State2 y = reduce(point);
            return max_rel_error(jacobian2(p, y), fd_jacobian2(p, y));
        }
        default:
            throw DomainError("jacobian_fd_check: no analytic Jacobian registered for model");
    }
}

} // namespace rumor
