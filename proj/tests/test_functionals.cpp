#include "doctest.h"

#include "cnls/functionals.hpp"
#include "cnls/operators.hpp"
#include "cnls/verify.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace cnls;

namespace {

RadialField sech_soliton(const GridPtr& g) {
    RadialField f(g);
    for (int i = 0; i < g->num_points; ++i)
        f.values[i] = std::sqrt(2.0) / std::cosh(g->r[i]);
    return f;
}

} // namespace

TEST_SUITE("functionals") {

TEST_CASE("closed-form soliton norms on a fine mesh") {
    const GridPtr g = make_grid(1, 30.0, 16384);
    const RadialField u = sech_soliton(g);
    CHECK(lp_norm_pow(u, 2.0) == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(h1_seminorm_sq(u) == doctest::Approx(4.0 / 3.0).epsilon(1e-6));
    CHECK(lp_norm_pow(u, 4.0) == doctest::Approx(16.0 / 3.0).epsilon(1e-6));

    ProblemParams p{1, 2.0, 0.0, 1.0};
    const StatePair s{u, zeros_like(u)};
    const EnergyBreakdown br = energy_and_tau(s, p);
    CHECK(br.omega_norm_sq == doctest::Approx(16.0 / 3.0).epsilon(1e-6));
    CHECK(std::fabs(br.tau) < 1e-4 * br.omega_norm_sq);
    CHECK(br.energy == doctest::Approx(4.0 / 3.0).epsilon(1e-5));
}

TEST_CASE("signed power") {
    CHECK(signed_pow(3.0, 2.0) == doctest::Approx(9.0));
    CHECK(signed_pow(-2.0, 1.5) == doctest::Approx(-std::pow(2.0, 1.5)));
    CHECK(signed_pow(0.0, 0.5) == 0.0);
    CHECK(signed_pow(-1.0, 3.0) == doctest::Approx(-1.0));
}

TEST_CASE("nehari projection and scale-invariant quotient") {
    const GridPtr g = make_grid(1, 25.0, 1024);
    std::mt19937_64 rng(4242);
    for (double q : {1.5, 2.0, 3.0}) {
        ProblemParams p{1, q, 1.3, 1.7};
        for (int k = 0; k < 5; ++k) {
            StatePair s{random_smooth_field(g, rng), random_smooth_field(g, rng)};
            const double t = nehari_projection_t(s, p);
            const StatePair proj = scaled(s, t);
            const EnergyBreakdown br = energy_and_tau(proj, p);
            CHECK(std::fabs(br.tau) < 1e-12 * br.omega_norm_sq);

            // J is scale invariant and equals I after projection
            const double J = scale_invariant_quotient(s, p);
            const double J2 = scale_invariant_quotient(scaled(s, 2.7), p);
            CHECK(std::fabs(J - J2) < 1e-12 * std::fabs(J));
            CHECK(std::fabs(J - br.energy) < 1e-11 * std::fabs(J));
            CHECK(on_manifold_energy(proj, p) ==
                  doctest::Approx(br.energy).epsilon(1e-10));
        }
    }
}

TEST_CASE("degenerate inputs") {
    const GridPtr g = make_grid(1, 20.0, 256);
    ProblemParams p{1, 2.0, 1.0, 1.0};
    StatePair zero{RadialField(g), RadialField(g)};
    CHECK_THROWS_AS(nehari_projection_t(zero, p), std::domain_error);

    std::mt19937_64 rng(7);
    StatePair s{random_smooth_field(g, rng), random_smooth_field(g, rng)};
    // generic states are off the manifold
    CHECK_THROWS_AS(on_manifold_energy(s, p), std::domain_error);
}

TEST_CASE("gradient matches central differences for non-quadratic exponents") {
    const GridPtr g = make_grid(1, 25.0, 1024);
    std::mt19937_64 rng(555);
    const double delta = 1e-4;
    // q = 1.5 carries extra truncation from the kinked third derivative of
    // |.|^3 at sign changes of the random fields
    struct Cfg { double q, tol; };
    for (const Cfg c : {Cfg{1.5, 5e-5}, Cfg{3.0, 1e-6}}) {
        ProblemParams p{1, c.q, 0.8, 1.4};
        for (int k = 0; k < 3; ++k) {
            StatePair s{random_smooth_field(g, rng), random_smooth_field(g, rng)};
            const StatePair grad = energy_gradient(s, p);
            const StatePair dir{random_smooth_field(g, rng), random_smooth_field(g, rng)};
            const double pred = inner_w(grad.u, dir.u) + inner_w(grad.v, dir.v);
            StatePair sp = s, sm = s;
            for (int i = 0; i < g->num_points; ++i) {
                sp.u.values[i] += delta * dir.u.values[i];
                sp.v.values[i] += delta * dir.v.values[i];
                sm.u.values[i] -= delta * dir.u.values[i];
                sm.v.values[i] -= delta * dir.v.values[i];
            }
            const double fd = (energy_and_tau(sp, p).energy -
                               energy_and_tau(sm, p).energy) / (2.0 * delta);
            CHECK(std::fabs(fd - pred) / std::max(1.0, std::fabs(pred)) < c.tol);
        }
    }
}

TEST_CASE("decoupling at b = 0") {
    const GridPtr g = make_grid(1, 25.0, 512);
    std::mt19937_64 rng(99);
    StatePair s{random_smooth_field(g, rng), random_smooth_field(g, rng)};
    ProblemParams p{1, 2.0, 0.0, 1.5};
    const StatePair grad = energy_gradient(s, p);

    StatePair s_uonly = s;
    s_uonly.v = zeros_like(s.v);
    const StatePair grad_uonly = energy_gradient(s_uonly, p);
    for (int i = 0; i < g->num_points; ++i)
        CHECK(grad.u.values[i] == doctest::Approx(grad_uonly.u.values[i]).epsilon(1e-14));
}

TEST_CASE("mismatched grids are rejected") {
    const GridPtr a = make_grid(1, 20.0, 256);
    const GridPtr b = make_grid(1, 20.0, 257);
    RadialField fa(a), fb(b);
    CHECK_THROWS_AS(require_same_grid(fa, fb), std::invalid_argument);
    CHECK_THROWS_AS(inner_w(fa, fb), std::invalid_argument);
}

} // TEST_SUITE
