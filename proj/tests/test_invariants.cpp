#include <doctest.h>

#include <cmath>
#include <limits>

#include "rumor/invariants.hpp"
#include "rumor/models.hpp"
#include "rumor/stability.hpp"
#include "test_util.hpp"

using namespace rumor;

TEST_SUITE_BEGIN("invariants");

TEST_CASE("piqueira hamiltonian value and singularities") {
    const Params p{0.1, 0.9, 0.8};
    const double h = hamiltonian_piqueira(p, State2{0.1, 0.4});
    CHECK(std::abs(h - (-0.4625452)) <= 1e-6);
    CHECK(h == doctest::Approx(-0.46254525763795007).epsilon(1e-14));

    // log(1) = 0 leaves only the linear terms
    for (double r : {0.0, 1e-6}) {
        const double v = hamiltonian_piqueira(p, State2{r, 1.0});
        CHECK(v == doctest::Approx(r / p.rho1 - 1.0 / p.rho2).epsilon(1e-15));
    }

    CHECK_THROWS_AS(hamiltonian_piqueira(p, State2{0.1, 0.0}), SingularityError);
    CHECK_THROWS_AS(hamiltonian_piqueira(p, State2{0.1, -0.2}), SingularityError);
}

TEST_CASE("belen-pearce hamiltonian variants") {
    CHECK(hamiltonian_bp(BpVariant::Corrected, 1.0, 0.0) == 2.0);
    CHECK(hamiltonian_bp(BpVariant::Paper, 1.0, 0.0) == -2.0);
    CHECK_THROWS_AS(hamiltonian_bp(BpVariant::Paper, 0.0, 0.1), SingularityError);

    // time derivative of the paper form along the flow at (I=0.25, S=0.2):
    // grad = (1/I - 2, 1) dotted with (-IS, -S(1-2I)) gives -2S + 4IS = -0.2
    const Vec2 f = belen_pearce_planar(0.25, 0.2);
    const double gi = 1.0 / 0.25 - 2.0;
    const double deriv = gi * f[0] + 1.0 * f[1];
    CHECK(deriv == doctest::Approx(-0.2).epsilon(1e-14));
}

TEST_CASE("piqueira hamiltonian is constant along trajectories") {
    const Params p{0.1, 0.9, 0.8};
    const Trajectory t = simulate(ModelId::Piqueira3, p, State3{0.4, 0.5, 0.1},
                                  SimOptions{1e-3, 20.0, 1e-10, 1});
    const DriftReport d = drift_along(t, FirstIntegral::piqueira(p));
    CHECK_FALSE(d.truncated);
    CHECK(d.max_drift <= 1e-8);
}

TEST_CASE("corrected belen-pearce integral is constant along trajectories") {
    const Trajectory t = simulate(ModelId::BelenPearce3, Params{}, State3{0.25, 0.2, 0.55},
                                  SimOptions{1e-3, 30.0, 1e-10, 1});
    const DriftReport good = drift_along(t, FirstIntegral::belen_pearce(BpVariant::Corrected));
    CHECK_FALSE(good.truncated);
    CHECK(good.max_drift <= 1e-8);

    // the published form visibly drifts on the same run
    const DriftReport bad = drift_along(t, FirstIntegral::belen_pearce(BpVariant::Paper));
    CHECK(bad.max_drift > 1e-2);
}

TEST_CASE("verifier: piqueira pair is conserved") {
    const Params p{0.4, 0.8, 1.0};
    const PlanarField field = [p](const Vec2& y) { return planar_field(p, State2{y[0], y[1]}); };
    const PlanarScalar cand = [p](const Vec2& y) {
        return hamiltonian_piqueira(p, State2{y[0], y[1]});
    };
    const ConservationReport rep = verify_first_integral(field, cand, 1000, 1e-6);
    CHECK(rep.verdict == Verdict::Conserved);
    CHECK(rep.sample_count == 1000);
    CHECK(rep.max_abs_residual <= 1e-6);
    CHECK(rep.mean_abs_residual <= rep.max_abs_residual);
}

TEST_CASE("verifier: published belen-pearce form fails, corrected form passes") {
    const PlanarField field = [](const Vec2& y) { return belen_pearce_planar(y[0], y[1]); };
    const PlanarScalar paper = [](const Vec2& y) {
        return hamiltonian_bp(BpVariant::Paper, y[0], y[1]);
    };
    const PlanarScalar corrected = [](const Vec2& y) {
        return hamiltonian_bp(BpVariant::Corrected, y[0], y[1]);
    };

    const ConservationReport bad = verify_first_integral(field, paper, 1000, 1e-6);
    CHECK(bad.verdict == Verdict::NotConserved);
    CHECK(bad.max_abs_residual >= 0.1);

    const ConservationReport good = verify_first_integral(field, corrected, 1000, 1e-6);
    CHECK(good.verdict == Verdict::Conserved);
}

TEST_CASE("verifier: constants are trivially conserved") {
    const PlanarField field = [](const Vec2& y) { return belen_pearce_planar(y[0], y[1]); };
    const PlanarScalar constant = [](const Vec2&) { return 3.25; };
    const ConservationReport rep = verify_first_integral(field, constant, 200, 1e-6);
    CHECK(rep.verdict == Verdict::Conserved);
    CHECK(rep.max_abs_residual <= 1e-9);
}

TEST_CASE("verifier: deterministic per seed, rejects bad input") {
    const Params p{0.4, 0.8, 1.0};
    const PlanarField field = [p](const Vec2& y) { return planar_field(p, State2{y[0], y[1]}); };
    const PlanarScalar cand = [p](const Vec2& y) {
        return hamiltonian_piqueira(p, State2{y[0], y[1]});
    };
    const ConservationReport a = verify_first_integral(field, cand, 64, 1e-6, 7);
    const ConservationReport b = verify_first_integral(field, cand, 64, 1e-6, 7);
    CHECK(a.max_abs_residual == b.max_abs_residual);
    CHECK(a.mean_abs_residual == b.mean_abs_residual);

    CHECK_THROWS_AS(verify_first_integral(field, cand, 0, 1e-6), DomainError);
    CHECK_THROWS_AS(verify_first_integral(field, cand, 10, 0.0), DomainError);

    const PlanarScalar nan_cand = [](const Vec2&) {
        return std::numeric_limits<double>::quiet_NaN();
    };
    CHECK_THROWS_AS(verify_first_integral(field, nan_cand, 10, 1e-6), EvaluationError);
}

TEST_CASE("drift_along handles constants and truncation") {
    const Params p{0.1, 0.9, 0.8};
    // constant trajectory: one state
    Trajectory flat;
    flat.times = {0.0};
    flat.states = {State3{0.4, 0.0, 0.6}};
    const DriftReport d0 = drift_along(flat, FirstIntegral::piqueira(p));
    CHECK(d0.max_drift == 0.0);
    CHECK(d0.final_drift == 0.0);

    Trajectory cut;
    cut.times = {0.0, 1.0, 2.0};
    cut.states = {State3{0.4, 0.5, 0.1}, State3{0.3, 0.5, 0.2}, State3{0.0, 0.5, 0.5}};
    const DriftReport dt = drift_along(cut, FirstIntegral::piqueira(p));
    CHECK(dt.truncated);
    CHECK(dt.samples == 2);

    Trajectory empty;
    CHECK_THROWS_AS(drift_along(empty, FirstIntegral::piqueira(p)), DomainError);
}

TEST_CASE("restriction of H to the equilibrium line peaks at sigma") {
    const Params p{0.4, 0.8, 1.0};
    const double sigma = threshold_sigma(p);
    auto phi = [&p](double i) { return hamiltonian_piqueira(p, State2{1.0 - i, i}); };
    const double eps = 1e-7;
    // strictly increasing left of sigma, strictly decreasing right of it
    for (double i : {0.01, 0.1, 0.2, sigma - 1e-3}) CHECK(phi(i + eps) > phi(i));
    for (double i : {sigma + 1e-3, 0.5, 0.7, 0.95}) CHECK(phi(i + eps) < phi(i));
    CHECK(phi(sigma) > phi(sigma - 1e-4));
    CHECK(phi(sigma) > phi(sigma + 1e-4));
}

TEST_CASE("integral registry per model") {
    const Params p{0.1, 0.9, 0.8};
    CHECK(integral_for(ModelId::Piqueira3, p).id == IntegralId::PiqueiraH);
    CHECK(integral_for(ModelId::PiqueiraPlanar, p).id == IntegralId::PiqueiraH);
    CHECK(integral_for(ModelId::BelenPearce3, p).id == IntegralId::BelenPearceCorrectedH);
    CHECK(integral_for(ModelId::BelenPearcePlanar, p).id == IntegralId::BelenPearceCorrectedH);
    CHECK_THROWS_AS(FirstIntegral::piqueira(Params{0.0, 0.9, 1.0}), DomainError);
}

TEST_SUITE_END();
