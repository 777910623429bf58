#include "cnls/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cnls {

double RadialGrid::ball_measure() const {
    return sigma * std::pow(r_max, n) / n;
}

void default_grid_settings(int n, double& r_max, int& num_points) {
    if (n == 1) {
        r_max = 30.0;
        num_points = 4096;
    } else {
        r_max = 20.0;
        num_points = 2048;
    }
}

GridPtr make_grid(int n, double r_max, int num_points) {
    if (n < 1 || n > 3) throw std::invalid_argument("grid: n must be 1, 2 or 3");
    if (!(r_max > 0.0)) throw std::invalid_argument("grid: r_max must be positive");
    if (num_points < 16) throw std::invalid_argument("grid: need at least 16 points");

    auto g = std::make_shared<RadialGrid>();
    const int N = num_points;
    g->n = n;
    g->r_max = r_max;
    g->num_points = N;
    g->h = r_max / (N - 1);
    g->sigma = (n == 1) ? 2.0 : (n == 2 ? 2.0 * std::numbers::pi : 4.0 * std::numbers::pi);

    const double h = g->h;
    const double sig = g->sigma;
    g->r.resize(N);
    for (int i = 0; i < N; ++i) g->r[i] = i * h;
    g->r[N - 1] = r_max;

    g->mcell.resize(N - 1);
    for (int i = 0; i + 1 < N; ++i)
        g->mcell[i] = sig * (std::pow(g->r[i + 1], n) - std::pow(g->r[i], n)) / n;
    g->mstiff = g->mcell;
    if (n >= 2) g->mstiff[0] = 0.0; // node 0 is derived, not a DOF

    g->w.assign(N, 0.0);
    if (n == 1) {
        for (int i = 0; i < N; ++i) g->w[i] = sig * h;
        g->w[0] = sig * h / 2.0;
    } else if (n == 2) {
        g->w[1] = sig * h * h * (9.0 / 8.0);
        for (int i = 2; i < N - 1; ++i) g->w[i] = sig * h * g->r[i];
    } else {
        g->w[1] = sig * h * h * h * (7.0 / 6.0);
        for (int i = 2; i < N - 1; ++i) g->w[i] = sig * h * (g->r[i] * g->r[i] + h * h / 9.0);
    }
    // last weight is the remainder against the exact ball measure; keeps the
    // total machine-exact
    double partial = 0.0;
    for (int i = 0; i < N - 1; ++i) partial += g->w[i];
    const double rest = g->ball_measure() - partial;
    if (!(rest > 0.0)) throw std::invalid_argument("grid: degenerate end weight");
    g->w[N - 1] = rest;
    return g;
}

bool same_grid(const RadialGrid& a, const RadialGrid& b) {
    return a.n == b.n && a.num_points == b.num_points && a.r_max == b.r_max;
}

} // namespace cnls
