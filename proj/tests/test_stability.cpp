#include <doctest.h>

#include <cmath>

#include "rumor/integrate.hpp"
#include "rumor/stability.hpp"
#include "test_util.hpp"

using namespace rumor;

namespace {

// Characteristic-polynomial coefficients of a 3x3 matrix:
// lambda^3 - c2 lambda^2 + c1 lambda - c0.
struct CharPoly {
    double c2; // trace
    double c1; // sum of principal 2x2 minors
    double c0; // determinant
};

CharPoly char_poly(const Matrix3& m) {
    const double c2 = m[0][0] + m[1][1] + m[2][2];
    const double c1 = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) +
                      (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
                      (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
    const double c0 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                      m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                      m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return {c2, c1, c0};
}

} // namespace

TEST_SUITE_BEGIN("stability");

TEST_CASE("threshold sigma") {
    CHECK(std::abs(threshold_sigma(Params{0.4, 0.8, 1.0}) - 1.0 / 3.0) <= 1e-15);
    CHECK(threshold_sigma(Params{0.7, 0.7, 1.0}) == 0.5);
    CHECK(std::abs(threshold_sigma(Params{0.1, 0.9, 0.8}) - 0.1) <= 1e-15);
    // independent of mu
    CHECK(threshold_sigma(Params{0.4, 0.8, 17.0}) == threshold_sigma(Params{0.4, 0.8, 1e-3}));
}

TEST_CASE("classification against sigma") {
    const Params p{0.1, 0.9, 1.0};
    CHECK(classify_equilibrium(p, 0.05).cls == StabilityClass::Stable);
    CHECK(classify_equilibrium(p, 0.5).cls == StabilityClass::Unstable);
    CHECK(classify_equilibrium(p, threshold_sigma(p)).cls == StabilityClass::Marginal);

    const EquilibriumReport rep = classify_equilibrium(Params{0.4, 0.8, 1.0}, 0.5);
    CHECK(rep.cls == StabilityClass::Unstable);
    CHECK(rep.tau == doctest::Approx(0.2).epsilon(1e-13));
    CHECK(rep.eigen_planar[0] == 0.0);
    CHECK(rep.eigen_planar[1] == rep.tau);
    CHECK(rep.eigen_full[0] == 0.0);
    CHECK(rep.eigen_full[1] == 0.0);
    CHECK(rep.eigen_full[2] == rep.tau);
    CHECK(rep.point.r == doctest::Approx(0.5));
    CHECK(rep.point.r + rep.point.i == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(classify_equilibrium(p, -0.1), DomainError);
    CHECK_THROWS_AS(classify_equilibrium(p, 1.1), DomainError);
}

TEST_CASE("tau sign is equivalent to the threshold comparison") {
    auto g = testutil::rng(31);
    std::uniform_real_distribution<double> uni(0.02, 0.98);
    for (int n = 0; n < 200; ++n) {
        const Params p{uni(g), uni(g), uni(g) * 3.0 + 0.1};
        const double sigma = threshold_sigma(p);
        const double i = uni(g);
        const double tau = classify_equilibrium(p, i).tau;
        if (std::abs(i - sigma) > 1e-9) {
            CHECK((tau < 0.0) == (i < sigma));
            CHECK((tau > 0.0) == (i > sigma));
        }
    }
}

TEST_CASE("scan splits into a stable prefix and unstable suffix") {
    const Params p{0.4, 0.8, 1.0};
    const auto scan = equilibrium_scan(p, 11);
    REQUIRE(scan.size() == 11);
    for (int k = 0; k <= 3; ++k) CHECK(scan[k].cls == StabilityClass::Stable);
    for (int k = 4; k <= 10; ++k) CHECK(scan[k].cls == StabilityClass::Unstable);

    // tau strictly increasing along the scan
    for (std::size_t k = 1; k < scan.size(); ++k) CHECK(scan[k].tau > scan[k - 1].tau);

    // exactly one flip, no Marginal in this grid
    int flips = 0;
    for (std::size_t k = 1; k < scan.size(); ++k)
        if (scan[k].cls != scan[k - 1].cls) ++flips;
    CHECK(flips == 1);

    CHECK_THROWS_AS(equilibrium_scan(p, 1), DomainError);
}

TEST_CASE("two-point scan is Stable then Unstable for any rates") {
    auto g = testutil::rng(32);
    std::uniform_real_distribution<double> uni(0.05, 0.95);
    for (int n = 0; n < 50; ++n) {
        const Params p{uni(g), uni(g), uni(g) + 0.05};
        const auto scan = equilibrium_scan(p, 2);
        CHECK(scan[0].cls == StabilityClass::Stable);   // tau(0) = -mu*rho1 < 0
        CHECK(scan[1].cls == StabilityClass::Unstable); // tau(1) = +mu*rho2 > 0
    }
}

TEST_CASE("full-system eigenvalues at equilibria") {
    CHECK(std::abs(eigen_full_at_equilibrium(Params{0.4, 0.8, 1.0}, 1.0 / 3.0)[2]) <= 1e-15);
    const auto eig = eigen_full_at_equilibrium(Params{0.1, 0.9, 0.8}, 0.5);
    CHECK(eig[0] == 0.0);
    CHECK(eig[1] == 0.0);
    CHECK(eig[2] == doctest::Approx(0.32).epsilon(1e-13));
}

TEST_CASE("closed-form spectrum agrees with the 3x3 characteristic polynomial") {
    const Params p{0.1, 0.9, 0.8};
    for (double i : {0.0, 0.05, 0.1, 1.0 / 3.0, 0.5, 0.9, 1.0}) {
        const Matrix3 j = jacobian3(p, State3{i, 0.0, 1.0 - i});
        const CharPoly cp = char_poly(j);
        const double tau = eigen_full_at_equilibrium(p, i)[2];
        // spectrum {0, 0, tau}  <=>  c2 = tau, c1 = 0, c0 = 0
        CHECK(std::abs(cp.c2 - tau) <= 1e-9);
        CHECK(std::abs(cp.c1) <= 1e-12);
        CHECK(std::abs(cp.c0) <= 1e-12);
        // planar nonzero eigenvalue coincides with the full one
        CHECK(classify_equilibrium(p, i).eigen_planar[1] == tau);
    }
}

TEST_CASE("jacobian fd check on both piqueira forms") {
    const Params p{0.2, 0.7, 1.4};
    auto g = testutil::rng(33);
    for (int n = 0; n < 100; ++n) {
        const State3 x = testutil::random_simplex(g);
        CHECK(jacobian_fd_check(ModelId::Piqueira3, p, x) <= 1e-6);
        CHECK(jacobian_fd_check(ModelId::PiqueiraPlanar, p, x) <= 1e-6);
    }
    // equilibrium points
    for (double i : {0.1, 0.5, 0.9}) {
        CHECK(jacobian_fd_check(ModelId::Piqueira3, p, State3{i, 0.0, 1.0 - i}) <= 1e-6);
    }
    CHECK_THROWS_AS(jacobian_fd_check(ModelId::BelenPearce3, p, State3{0.3, 0.3, 0.4}),
                    DomainError);
}

TEST_CASE("an injected jacobian fault is caught by the fd comparison") {
    const Params p{0.2, 0.7, 1.4};
    const State3 x{0.3, 0.4, 0.3};
    Matrix3 j = jacobian3(p, x);
    j[0][1] += 0.1;
    CHECK(max_rel_error(j, fd_jacobian3(p, x)) >= 0.01);
}

TEST_CASE("stable equilibria confine nearby starts, unstable ones repel") {
    const Params p{0.4, 0.8, 1.0};
    const SimOptions opts{1e-2, 100.0, 0.0, 10};

    // stable side: I* = 0.1 < sigma = 1/3; start 1e-3 inside Omega
    {
        const State2 center{0.9, 0.1};
        const Trajectory t = simulate_planar(p, State2{center.r - 1e-3, center.i}, opts);
        double worst = 0.0;
        for (const State3& st : t.states)
            worst = std::max(worst, std::hypot(st.r - center.r, st.i - center.i));
        CHECK(worst <= 1e-1);
    }

    // unstable side: I* = 0.8 > sigma; the same perturbation escapes
    {
        const State2 center{0.2, 0.8};
        const Trajectory t = simulate_planar(p, State2{center.r - 1e-3, center.i}, opts);
        double worst = 0.0;
        for (const State3& st : t.states)
            worst = std::max(worst, std::hypot(st.r - center.r, st.i - center.i));
        CHECK(worst > 1e-1);
    }
}

TEST_SUITE_END();
