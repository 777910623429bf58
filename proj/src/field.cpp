#include "cnls/field.hpp"

#include <cmath>
#include <stdexcept>

namespace cnls {

RadialField::RadialField(GridPtr g, std::vector<double> v)
    : grid(std::move(g)), values(std::move(v)) {
    if (static_cast<int>(values.size()) != grid->num_points)
        throw std::invalid_argument("field: value count does not match grid");
    for (double x : values)
        if (!std::isfinite(x)) throw std::invalid_argument("field: non-finite value");
}

StatePair::StatePair(RadialField uu, RadialField vv) : u(std::move(uu)), v(std::move(vv)) {
    require_same_grid(u, v);
}

RadialField zeros_like(const RadialField& f) { return RadialField(f.grid); }

void require_same_grid(const RadialField& a, const RadialField& b) {
    if (!a.grid || !b.grid || !same_grid(*a.grid, *b.grid))
        throw std::invalid_argument("fields live on different grids");
}

void scale_in_place(RadialField& f, double s) {
    for (double& x : f.values) x *= s;
}

StatePair scaled(const StatePair& s, double t) {
    StatePair out = s;
    scale_in_place(out.u, t);
    scale_in_place(out.v, t);
    return out;
}

} // namespace cnls
