#include "doctest.h"

#include "cnls/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace cnls;

TEST_SUITE("grid") {

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(make_grid(0, 10.0, 128), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(4, 10.0, 128), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(1, -1.0, 128), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(1, 10.0, 8), std::invalid_argument);
    CHECK_NOTHROW(make_grid(3, 10.0, 16));
}

TEST_CASE("nodes and surface factors") {
    const GridPtr g = make_grid(2, 12.0, 256);
    CHECK(g->num_points == 256);
    CHECK(g->r[0] == 0.0);
    CHECK(g->r[255] == doctest::Approx(12.0).epsilon(1e-14));
    CHECK(g->h == doctest::Approx(12.0 / 255).epsilon(1e-14));
    CHECK(make_grid(1, 5.0, 64)->sigma == doctest::Approx(2.0));
    CHECK(make_grid(2, 5.0, 64)->sigma == doctest::Approx(2.0 * std::numbers::pi));
    CHECK(make_grid(3, 5.0, 64)->sigma == doctest::Approx(4.0 * std::numbers::pi));
}

TEST_CASE("weights integrate the ball exactly") {
    for (int n : {1, 2, 3}) {
        const GridPtr g = make_grid(n, 17.3, 777);
        double s = 0.0, sc = 0.0;
        for (double w : g->w)
            s += w;
        for (double m : g->mcell)
            sc += m;
        const double ref = g->ball_measure();
        CHECK(std::fabs(s - ref) / ref < 1e-13);
        CHECK(std::fabs(sc - ref) / ref < 1e-13);
    }
}

TEST_CASE("weight structure") {
    for (int n : {2, 3}) {
        const GridPtr g = make_grid(n, 10.0, 200);
        CHECK(g->w[0] == 0.0);
        for (int i = 1; i < g->num_points; ++i)
            CHECK(g->w[i] > 0.0);
        CHECK(g->dof_lo() == 1);
    }
    const GridPtr g1 = make_grid(1, 10.0, 200);
    CHECK(g1->dof_lo() == 0);
    for (int i = 0; i < g1->num_points; ++i)
        CHECK(g1->w[i] > 0.0);
    // trapezoid ends are half cells
    CHECK(g1->w[0] == doctest::Approx(g1->sigma * g1->h / 2).epsilon(1e-14));
    CHECK(g1->w[1] == doctest::Approx(g1->sigma * g1->h).epsilon(1e-14));
}

TEST_CASE("stiffness cell masses positive on the dof range") {
    for (int n : {1, 2, 3}) {
        const GridPtr g = make_grid(n, 9.0, 150);
        for (int c = (n >= 2 ? 1 : 0); c < g->num_points - 1; ++c)
            CHECK(g->mstiff[c] > 0.0);
        if (n >= 2)
            CHECK(g->mstiff[0] == 0.0);
    }
}

TEST_CASE("defaults and grid identity") {
    double rmax;
    int N;
    default_grid_settings(1, rmax, N);
    CHECK(rmax == 30.0);
    CHECK(N == 4096);
    default_grid_settings(2, rmax, N);
    CHECK(rmax == 20.0);
    CHECK(N == 2048);
    default_grid_settings(3, rmax, N);
    CHECK(rmax == 20.0);
    CHECK(N == 2048);

    const GridPtr a = make_grid(1, 10.0, 100);
    const GridPtr b = make_grid(1, 10.0, 100);
    const GridPtr c = make_grid(1, 10.0, 101);
    CHECK(same_grid(*a, *b));
    CHECK(!same_grid(*a, *c));
}

} // TEST_SUITE
