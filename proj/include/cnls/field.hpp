#pragma once

#include "cnls/grid.hpp"

#include <vector>

namespace cnls {

// Nodal values of a radial function on its grid.
struct RadialField {
    GridPtr grid;
    std::vector<double> values;

    RadialField() = default;
    explicit RadialField(GridPtr g) : grid(std::move(g)), values(grid->num_points, 0.0) {}
    RadialField(GridPtr g, std::vector<double> v);

    int size() const { return static_cast<int>(values.size()); }
    double& operator[](int i) { return values[i]; }
    double operator[](int i) const { return values[i]; }
};

// The pair (u, v) all functionals act on; both components share one grid.
struct StatePair {
    RadialField u;
    RadialField v;

    StatePair() = default;
    StatePair(RadialField uu, RadialField vv);
};

RadialField zeros_like(const RadialField& f);

// Throws std::invalid_argument unless both live on structurally equal grids.
void require_same_grid(const RadialField& a, const RadialField& b);

void scale_in_place(RadialField& f, double s);
StatePair scaled(const StatePair& s, double t);

} // namespace cnls
