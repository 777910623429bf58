#include "doctest.h"

#include "cnls/operators.hpp"
#include "cnls/symmetrization.hpp"
#include "cnls/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

using namespace cnls;

TEST_SUITE("symmetrization") {

TEST_CASE("pool adjacent violators") {
    {
        double y[2] = {1.0, 3.0};
        const double w[2] = {1.0, 1.0};
        pava_nonincreasing(y, w, 2);
        CHECK(y[0] == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(y[1] == doctest::Approx(2.0).epsilon(1e-15));
    }
    {
        // weighted merge: (3*1 + 1*3)/4
        double y[2] = {1.0, 3.0};
        const double w[2] = {3.0, 1.0};
        pava_nonincreasing(y, w, 2);
        CHECK(y[0] == doctest::Approx(1.5).epsilon(1e-15));
        CHECK(y[1] == doctest::Approx(1.5).epsilon(1e-15));
    }
    {
        // already nonincreasing: untouched
        double y[3] = {3.0, 2.0, 1.0};
        const double w[3] = {1.0, 2.0, 1.0};
        pava_nonincreasing(y, w, 3);
        CHECK(y[0] == 3.0);
        CHECK(y[1] == 2.0);
        CHECK(y[2] == 1.0);
    }
    {
        double y[4] = {1.0, 2.0, 4.0, 0.5};
        const double w[4] = {1.0, 1.0, 1.0, 1.0};
        pava_nonincreasing(y, w, 4);
        for (int i = 0; i + 1 < 4; ++i)
            CHECK(y[i] >= y[i + 1] - 1e-15);
        // block mean of the first three is (1+2+4)/3
        CHECK(y[0] == doctest::Approx(7.0 / 3.0).epsilon(1e-15));
        CHECK(y[3] == 0.5);
    }
}

TEST_CASE("monotone projection output shape") {
    const GridPtr g = make_grid(2, 15.0, 400);
    std::mt19937_64 rng(31);
    for (int k = 0; k < 5; ++k) {
        const RadialField f = random_smooth_field(g, rng);
        const RearrangedField pr = monotone_projection(f);
        CHECK(pr.is_monotone);
        for (int i = 1; i + 1 < g->num_points; ++i)
            CHECK(pr.field.values[i] >= pr.field.values[i + 1] - 1e-14);
        for (double v : pr.field.values)
            CHECK(v >= 0.0);
        // idempotent
        const RearrangedField pr2 = monotone_projection(pr.field);
        for (int i = 0; i < g->num_points; ++i)
            CHECK(pr2.field.values[i] == doctest::Approx(pr.field.values[i]).epsilon(1e-13));
    }
}

TEST_CASE("rearrangement of an off-center bump") {
    // the profile sech(|r - 5|) has its mass away from the origin
    for (int N : {2048, 4096}) {
        const GridPtr g = make_grid(1, 20.0, N);
        RadialField f(g);
        for (int i = 0; i < g->num_points; ++i)
            f.values[i] = 1.0 / std::cosh(g->r[i] - 5.0);
        const RearrangedField fs = decreasing_rearrangement(f);
        CHECK(fs.is_monotone);
        for (int i = 0; i + 1 < g->num_points; ++i)
            CHECK(fs.field.values[i] >= fs.field.values[i + 1] - 1e-14);

        // L^2 is preserved to roundoff by construction
        const double d2 = std::fabs(lp_norm_pow(fs.field, 2.0) - lp_norm_pow(f, 2.0)) /
                          lp_norm_pow(f, 2.0);
        CHECK(d2 < 1e-12);

        // other norms agree to cell resolution; second order in practice
        const double d4 = std::fabs(lp_norm_pow(fs.field, 4.0) - lp_norm_pow(f, 4.0)) /
                          lp_norm_pow(f, 4.0);
        CHECK(d4 < (N == 2048 ? 1e-3 : 2.5e-4));

        // the gradient does not increase
        CHECK(h1_seminorm_sq(fs.field) <= h1_seminorm_sq(f) * (1.0 + 1e-12));
    }
}

TEST_CASE("rearrangement is an exact value permutation for axis-peaked fields") {
    const GridPtr g = make_grid(1, 22.0, 1500);
    RadialField f(g);
    for (int i = 0; i < g->num_points; ++i) {
        const double r = g->r[i];
        f.values[i] = 1.5 * std::exp(-r * r) + 0.3 * std::exp(-(r - 3.0) * (r - 3.0));
    }
    const RearrangedField fs = decreasing_rearrangement(f);

    std::vector<double> a = f.values, b = fs.field.values;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::fabs(a[i] - b[i]));
    CHECK(worst < 1e-14);

    for (double p : {1.5, 2.0, 3.0, 4.0}) {
        const double drift =
            std::fabs(lp_norm_pow(fs.field, p) - lp_norm_pow(f, p)) / lp_norm_pow(f, p);
        CHECK(drift < 1e-13);
    }
}

TEST_CASE("idempotence") {
    for (int n : {1, 2}) {
        const GridPtr g = make_grid(n, 18.0, 700);
        std::mt19937_64 rng(n);
        const RadialField f = random_smooth_field(g, rng);
        const RearrangedField fs = decreasing_rearrangement(f);
        const RearrangedField fss = decreasing_rearrangement(fs.field);
        for (int i = 0; i < g->num_points; ++i)
            CHECK(fss.field.values[i] ==
                  doctest::Approx(fs.field.values[i]).epsilon(1e-13));
    }
}

TEST_CASE("gradient and product inequalities on random fields") {
    for (int n : {1, 2, 3}) {
        const GridPtr g = make_grid(n, 16.0, 900);
        std::mt19937_64 rng(100 + n);
        for (int k = 0; k < 20; ++k) {
            const RadialField f = random_smooth_field(g, rng);
            const ComparisonReport ps = check_polya_szego(f);
            CHECK(ps.holds);

            const RadialField f2 = random_smooth_field(g, rng);
            const ComparisonReport hl = check_hardy_littlewood(f, f2, 2.0);
            CHECK(hl.holds);
            CHECK(hl.holds_q);
        }
    }
}

TEST_CASE("n >= 2 rearrangement conserves mass up to the derived axis node") {
    const GridPtr g = make_grid(2, 15.0, 1200);
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 10; ++k) {
        const RadialField f = random_smooth_field(g, rng);
        const RearrangedField fs = decreasing_rearrangement(f);
        const double d2 = std::fabs(lp_norm_pow(fs.field, 2.0) - lp_norm_pow(f, 2.0)) /
                          lp_norm_pow(f, 2.0);
        CHECK(d2 < 1e-12);
    }
}

} // TEST_SUITE
