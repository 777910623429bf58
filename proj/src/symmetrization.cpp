#include "cnls/symmetrization.hpp"

#include "cnls/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace cnls {

namespace {

// Even extrapolation of the axis value from nodes 1,2; the max() keeps the
// result inside the nonincreasing cone (after sorting/PAVA f1 >= f2, so the
// extrapolated value is >= f1 anyway and the guard is belt-and-braces).
double axis_value(const std::vector<double>& v) {
    return std::max(v[1], (4.0 * v[1] - v[2]) / 3.0);
}

} // namespace

RearrangedField decreasing_rearrangement(const RadialField& f) {
    const RadialGrid& g = *f.grid;
    const int N = g.num_points;

    // Atoms of the weighted nodal measure, sorted by magnitude (descending).
    // The quantile function of |f| is the step function taking value mag[k]
    // on a measure interval of length wt[k].
    std::vector<double> mag, wt;
    mag.reserve(N);
    wt.reserve(N);
    for (int i = 0; i < N; ++i) {
        if (g.w[i] > 0.0) {
            mag.push_back(std::fabs(f.values[i]));
            wt.push_back(g.w[i]);
        }
    }
    const int K = static_cast<int>(mag.size());
    std::vector<int> order(K);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return mag[a] > mag[b]; });

    // Resample onto the grid-order atoms.  Each node takes the L^2 mean of
    // the quantile function over its own measure slot: this keeps the L^2
    // norm exact for any weights, reduces to a plain value permutation when
    // both partitions align (then every L^p is exact), and Cauchy-Schwarz per
    // slot makes the discrete Hardy-Littlewood inequality exact.
    RearrangedField out;
    out.field = zeros_like(f);
    out.is_monotone = true;

    int k = 0;
    double rem = (K > 0) ? wt[order[0]] : 0.0;
    for (int i = 0; i < N; ++i) {
        if (g.w[i] <= 0.0)
            continue;
        double need = g.w[i];
        double acc = 0.0;
        while (need > 0.0 && k < K) {
            const double m = mag[order[k]];
            const double take = std::min(need, rem);
            acc += take * m * m;
            need -= take;
            rem -= take;
            if (rem <= 0.0) {
                ++k;
                rem = (k < K) ? wt[order[k]] : 0.0;
            }
        }
        out.field.values[i] = std::sqrt(acc / g.w[i]);
    }
    if (g.n >= 2 && N >= 3)
        out.field.values[0] = axis_value(out.field.values);
    return out;
}

void pava_nonincreasing(double* y, const double* w, int len) {
    if (len <= 1)
        return;
    // Blocks of pooled values; nonincreasing means a block may not exceed its
    // left neighbour, so merge while it does.
    std::vector<double> bv(len), bw(len);
    std::vector<int> bc(len);
    int top = -1;
    for (int i = 0; i < len; ++i) {
        ++top;
        bv[top] = y[i];
        bw[top] = w[i];
        bc[top] = 1;
        while (top > 0 && bv[top] > bv[top - 1]) {
            const double tw = bw[top - 1] + bw[top];
            if (tw > 0.0)
                bv[top - 1] = (bw[top - 1] * bv[top - 1] + bw[top] * bv[top]) / tw;
            else
                bv[top - 1] = (bc[top - 1] * bv[top - 1] + bc[top] * bv[top]) /
                              (bc[top - 1] + bc[top]);
            bw[top - 1] = tw;
            bc[top - 1] += bc[top];
            --top;
        }
    }
    int i = 0;
    for (int b = 0; b <= top; ++b)
        for (int c = 0; c < bc[b]; ++c)
            y[i++] = bv[b];
}

RearrangedField monotone_projection(const RadialField& f) {
    const RadialGrid& g = *f.grid;
    const int N = g.num_points;

    RearrangedField out;
    out.field = zeros_like(f);
    out.is_monotone = true;
    for (int i = 0; i < N; ++i)
        out.field.values[i] = std::fabs(f.values[i]);

    const int lo = g.dof_lo();
    pava_nonincreasing(out.field.values.data() + lo, g.w.data() + lo, N - lo);
    if (g.n >= 2 && N >= 3)
        out.field.values[0] = axis_value(out.field.values);
    return out;
}

ComparisonReport check_polya_szego(const RadialField& f) {
    RadialField af = zeros_like(f);
    for (int i = 0; i < f.size(); ++i)
        af.values[i] = std::fabs(f.values[i]);

    const RearrangedField fs = decreasing_rearrangement(f);

    ComparisonReport rep;
    rep.lhs = std::sqrt(h1_seminorm_sq(fs.field));
    rep.rhs = std::sqrt(h1_seminorm_sq(af));
    rep.holds = rep.lhs <= rep.rhs * (1.0 + 1e-6);
    return rep;
}

ComparisonReport check_hardy_littlewood(const RadialField& f, const RadialField& g,
                                        double q) {
    require_same_grid(f, g);
    const RearrangedField fs = decreasing_rearrangement(f);
    const RearrangedField gs = decreasing_rearrangement(g);

    const RadialGrid& gr = *f.grid;
    ComparisonReport rep;
    double lhs_qp = 0.0, rhs_qp = 0.0;
    for (int i = 0; i < gr.num_points; ++i) {
        const double pf = std::fabs(f.values[i] * g.values[i]);
        const double ps = fs.field.values[i] * gs.field.values[i];
        rep.lhs += gr.w[i] * pf;
        rep.rhs += gr.w[i] * ps;
        lhs_qp += gr.w[i] * std::pow(pf, q);
        rhs_qp += gr.w[i] * std::pow(ps, q);
    }
    rep.holds = rep.lhs <= rep.rhs * (1.0 + 1e-6);
    rep.lhs_q = std::pow(lhs_qp, 1.0 / q);
    rep.rhs_q = std::pow(rhs_qp, 1.0 / q);
    rep.holds_q = rep.lhs_q <= rep.rhs_q * (1.0 + 1e-6);
    return rep;
}

} // namespace cnls
