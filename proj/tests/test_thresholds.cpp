#include "doctest.h"

#include "cnls/functionals.hpp"
#include "cnls/scalar.hpp"
#include "cnls/thresholds.hpp"

#include <cmath>
#include <stdexcept>

using namespace cnls;

TEST_SUITE("thresholds") {

TEST_CASE("first constant, plug-in values") {
    CHECK(constant_C({1, 2.0, 0.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(constant_C({2, 2.0, 0.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(constant_C({1, 2.0, 0.0, 5.0}) == doctest::Approx(101.4).epsilon(1e-12));
}

TEST_CASE("second constant, plug-in values and domain") {
    CHECK(constant_D(2.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(constant_D(2.0, 5.0) == doctest::Approx(37.4).epsilon(1e-12));
    CHECK(constant_D(3.0, 1.0) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(constant_D(3.0, 2.0) == doctest::Approx(19.6222131779).epsilon(1e-9));
    CHECK_THROWS_AS(constant_D(1.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(constant_D(2.0, 0.5), std::domain_error);
}

TEST_CASE("sufficient bound reduces to 2^{q-1} - 1 at omega = eps = 1") {
    for (double q : {1.5, 2.0, 2.5, 3.0}) {
        for (int n : {1, 2, 3}) {
            CHECK(sufficient_bound(q, 1.0, n, 1.0) ==
                  doctest::Approx(std::pow(2.0, q - 1.0) - 1.0).epsilon(1e-12));
        }
    }
    // and matches the second constant at eps = 1, n = 1
    CHECK(sufficient_bound(3.0, 2.0, 1, 1.0) ==
          doctest::Approx(constant_D(3.0, 2.0)).epsilon(1e-12));
    CHECK(sufficient_bound(2.0, 5.0, 1, 1.0) ==
          doctest::Approx(constant_D(2.0, 5.0)).epsilon(1e-12));
    CHECK_THROWS_AS(coupling_prefactor(2.0, 0.0), std::domain_error);
}

TEST_CASE("prefactor optimization at q = 3") {
    const EpsOptimum eo = optimize_prefactor(3.0);
    CHECK(!eo.at_boundary);
    CHECK(eo.eps_opt * eo.eps_opt ==
          doctest::Approx(0.5 * (std::sqrt(5.0) - 1.0)).epsilon(1e-7));
    CHECK(eo.value == doctest::Approx(3.330190676786).epsilon(1e-8));
}

TEST_CASE("epsilon optimization by regime") {
    // q < 2: the infimum sits at the eps -> 0 boundary
    const EpsOptimum low = optimize_epsilon(1.5, 2.0, 1);
    CHECK(low.at_boundary);
    CHECK(low.eps_opt == doctest::Approx(1e-3).epsilon(1e-10));

    // q > 2: interior optimum, no worse than the eps = 1 value
    const EpsOptimum high = optimize_epsilon(3.0, 2.0, 1);
    CHECK(!high.at_boundary);
    CHECK(high.value > 0.0);
    CHECK(high.value <= constant_D(3.0, 2.0) + 1e-10);
}

TEST_CASE("threshold report fields") {
    const ThresholdReport a = threshold_report({1, 3.0, 0.0, 2.0});
    CHECK(a.d_const.has_value());
    CHECK(*a.d_const == doctest::Approx(19.6222131779).epsilon(1e-9));
    CHECK(a.b_opt > 0.0);
    CHECK(!a.note.empty());

    const ThresholdReport b = threshold_report({2, 3.0, 0.0, 2.0});
    CHECK(!b.d_const.has_value());

    const ThresholdReport c = threshold_report({1, 1.5, 0.0, 2.0});
    CHECK(c.b_opt == 0.0);
    CHECK(c.note.find("any b > 0") != std::string::npos);
}

TEST_CASE("trial state sits on the manifold with a bracketed scaling") {
    const GridPtr g = make_grid(1, 30.0, 2048);
    const ScalarGroundState u0 = solve_scalar_profile(2.0, 1.0, g);

    ProblemParams p{1, 2.0, 1.0, 2.0};
    const TrialState tr = build_trial_state(p, 1.0, u0);
    const EnergyBreakdown br = energy_and_tau(tr.state, p);
    CHECK(std::fabs(br.tau) < 1e-12 * br.omega_norm_sq);
    CHECK(tr.x_lower < tr.x_upper);
    const double x2q2 = std::pow(tr.x, 2.0 * p.q - 2.0);
    CHECK(x2q2 > tr.x_lower - 1e-4 * tr.x_upper);
    CHECK(x2q2 < tr.x_upper + 1e-4 * tr.x_upper);
    CHECK(tr.energy == doctest::Approx(br.energy).epsilon(1e-12));

    CHECK_THROWS_AS(build_trial_state(p, 0.0, u0), std::domain_error);
}

TEST_CASE("sufficiency witness exists only below the optimizer domain") {
    // for (q, n, omega, b) = (1.5, 2, 3, 0.05) the trial beats the semitrivial
    // branch only for very small eps
    ProblemParams p{2, 1.5, 0.05, 3.0};
    const GridPtr g = make_grid(2, 20.0, 2048);
    const ScalarGroundState u0 = solve_scalar_profile(1.5, 1.0, g);

    bool found_small = false;
    bool found_large = false;
    for (int k = 0; k <= 30; ++k) {
        const double eps = std::pow(10.0, -5.0 + 5.0 * k / 30.0);
        const SufficiencyReport rep = check_sufficiency(p, eps, u0);
        if (rep.beats_semitrivial) {
            if (eps < 1e-3)
                found_small = true;
            else
                found_large = true;
        }
    }
    CHECK(found_small);
    CHECK(!found_large);
}

} // TEST_SUITE
