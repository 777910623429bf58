#include "cnls/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace cnls {

double integrate(const RadialField& f) {
    const auto& w = f.grid->w;
    double s = 0.0;
    for (int i = 0; i < f.size(); ++i) s += w[i] * f.values[i];
    return s;
}

double inner_w(const RadialField& f, const RadialField& g) {
    require_same_grid(f, g);
    const auto& w = f.grid->w;
    double s = 0.0;
    for (int i = 0; i < f.size(); ++i) s += w[i] * f.values[i] * g.values[i];
    return s;
}

double lp_norm_pow(const RadialField& f, double p) {
    const auto& w = f.grid->w;
    double s = 0.0;
    if (p == 2.0) {
        for (int i = 0; i < f.size(); ++i) s += w[i] * f.values[i] * f.values[i];
    } else {
        for (int i = 0; i < f.size(); ++i) s += w[i] * std::pow(std::fabs(f.values[i]), p);
    }
    return s;
}

double lp_norm_p(const RadialField& f, double p) {
    if (p < 1.0) throw std::invalid_argument("lp_norm_p: p must be >= 1");
    return std::pow(lp_norm_pow(f, p), 1.0 / p);
}

void apply_stiffness(const RadialField& f, std::vector<double>& out) {
    const RadialGrid& g = *f.grid;
    const int N = g.num_points;
    const double h2 = g.h * g.h;
    const auto& m = g.mstiff;
    const auto& v = f.values;
    out.assign(N, 0.0);
    for (int i = 0; i < N; ++i) {
        double s = 0.0;
        if (i > 0) s += m[i - 1] * (v[i] - v[i - 1]);
        if (i + 1 < N) s += m[i] * (v[i] - v[i + 1]);
        out[i] = s / h2;
    }
}

double h1_seminorm_sq(const RadialField& f) {
    const RadialGrid& g = *f.grid;
    const double h2 = g.h * g.h;
    double s = 0.0;
    for (int c = 0; c + 1 < g.num_points; ++c) {
        const double d = f.values[c + 1] - f.values[c];
        s += g.mstiff[c] * d * d;
    }
    return s / h2;
}

RadialField apply_laplacian(const RadialField& f) {
    const RadialGrid& g = *f.grid;
    const int N = g.num_points;
    std::vector<double> af;
    apply_stiffness(f, af);
    RadialField out(f.grid);
    for (int i = 0; i < N; ++i)
        out.values[i] = (g.w[i] > 0.0) ? -af[i] / g.w[i] : 0.0;
    // symmetric limit at the origin (also covers the derived node for n >= 2)
    out.values[0] = 2.0 * g.n * (f.values[1] - f.values[0]) / (g.h * g.h);
    return out;
}

RadialField pointwise_laplacian(const RadialField& f) {
    const RadialGrid& g = *f.grid;
    const int N = g.num_points;
    const double h = g.h;
    const auto& v = f.values;
    RadialField out(f.grid);
    out.values[0] = 2.0 * g.n * (v[1] - v[0]) / (h * h);
    for (int i = 1; i < N; ++i) {
        const double fp = (i + 1 < N) ? v[i + 1] : 0.0; // Dirichlet ghost
        const double second = (fp - 2.0 * v[i] + v[i - 1]) / (h * h);
        const double first = (fp - v[i - 1]) / (2.0 * h);
        out.values[i] = second + (g.n - 1) * first / g.r[i];
    }
    return out;
}

RadialField shifted_solve(const RadialField& rhs, double c) {
    const RadialGrid& g = *rhs.grid;
    const int N = g.num_points;
    const double h2 = g.h * g.h;
    const int lo = g.dof_lo();
    const int hi = g.dof_hi(); // exclusive
    const int m = hi - lo;

    // tridiagonal rows lo..hi-1 of A + c W
    std::vector<double> diag(m), sub(m, 0.0), b(m);
    for (int k = 0; k < m; ++k) {
        const int i = lo + k;
        double d = 0.0;
        if (i > 0) d += g.mstiff[i - 1];
        d += g.mstiff[i];
        diag[k] = d / h2 + c * g.w[i];
        if (k > 0) sub[k] = -g.mstiff[i - 1] / h2; // couples k-1 <-> k
        b[k] = g.w[i] * rhs.values[i];
    }
    // Thomas sweep (symmetric: super[k] = sub[k+1])
    for (int k = 1; k < m; ++k) {
        const double f = sub[k] / diag[k - 1];
        diag[k] -= f * sub[k];
        b[k] -= f * b[k - 1];
    }
    RadialField x(rhs.grid);
    if (m > 0) {
        x.values[lo + m - 1] = b[m - 1] / diag[m - 1];
        for (int k = m - 2; k >= 0; --k)
            x.values[lo + k] = (b[k] - sub[k + 1] * x.values[lo + k + 1]) / diag[k];
    }
    if (g.n >= 2) x.values[0] = (4.0 * x.values[1] - x.values[2]) / 3.0;
    return x;
}

} // namespace cnls
