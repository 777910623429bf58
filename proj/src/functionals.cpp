#include "cnls/functionals.hpp"

#include "cnls/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace cnls {

double omega_norm_sq(const StatePair& s, const ProblemParams& p) {
    return lp_norm_pow(s.u, 2.0) + h1_seminorm_sq(s.u)
         + p.omega * p.omega * lp_norm_pow(s.v, 2.0) + h1_seminorm_sq(s.v);
}

double p_term(const StatePair& s, const ProblemParams& p) {
    const auto& w = s.u.grid->w;
    const double q2 = 2.0 * p.q;
    double pu = 0.0, pv = 0.0, puv = 0.0;
    for (int i = 0; i < s.u.size(); ++i) {
        const double au = std::fabs(s.u.values[i]);
        const double av = std::fabs(s.v.values[i]);
        pu += w[i] * std::pow(au, q2);
        pv += w[i] * std::pow(av, q2);
        puv += w[i] * std::pow(au * av, p.q);
    }
    return pu + pv + 2.0 * p.b * puv;
}

EnergyBreakdown energy_and_tau(const StatePair& s, const ProblemParams& p) {
    EnergyBreakdown e;
    e.omega_norm_sq = omega_norm_sq(s, p);
    e.p_term = p_term(s, p);
    e.energy = 0.5 * e.omega_norm_sq - e.p_term / (2.0 * p.q);
    e.tau = e.omega_norm_sq - e.p_term;
    return e;
}

double signed_pow(double x, double a) {
    if (x == 0.0) return 0.0;
    const double m = std::pow(std::fabs(x), a);
    return x > 0.0 ? m : -m;
}

StatePair energy_gradient(const StatePair& s, const ProblemParams& p) {
    const RadialGrid& g = *s.u.grid;
    const int N = g.num_points;
    const double q = p.q;
    std::vector<double> au_buf, av_buf;
    apply_stiffness(s.u, au_buf);
    apply_stiffness(s.v, av_buf);
    StatePair out(RadialField(s.u.grid), RadialField(s.v.grid));
    for (int i = 0; i < N; ++i) {
        if (g.w[i] <= 0.0) continue; // derived node: energy does not see it
        const double u = s.u.values[i];
        const double v = s.v.values[i];
        const double au = std::fabs(u), av = std::fabs(v);
        // |x|^{q-2} x written as sign(x) |x|^{q-1}: finite at 0 for q > 1
        const double nl_u = signed_pow(u, 2.0 * q - 1.0)
                          + p.b * std::pow(av, q) * signed_pow(u, q - 1.0);
        const double nl_v = signed_pow(v, 2.0 * q - 1.0)
                          + p.b * std::pow(au, q) * signed_pow(v, q - 1.0);
        out.u.values[i] = au_buf[i] / g.w[i] + u - nl_u;
        out.v.values[i] = av_buf[i] / g.w[i] + p.omega * p.omega * v - nl_v;
    }
    return out;
}

double nehari_projection_t(const StatePair& s, const ProblemParams& p) {
    const double a = omega_norm_sq(s, p);
    const double P = p_term(s, p);
    if (!(a > 0.0) || !(P > 0.0))
        throw std::domain_error("nehari_projection_t: zero state or vanishing nonlinear term");
    return std::pow(a / P, 1.0 / (2.0 * p.q - 2.0));
}

double on_manifold_energy(const StatePair& s, const ProblemParams& p) {
    const EnergyBreakdown e = energy_and_tau(s, p);
    if (std::fabs(e.tau) > 1e-8 * e.omega_norm_sq)
        throw std::domain_error("on_manifold_energy: state is not on the manifold");
    return (0.5 - 1.0 / (2.0 * p.q)) * e.omega_norm_sq;
}

double scale_invariant_quotient(const StatePair& s, const ProblemParams& p) {
    const double a = omega_norm_sq(s, p);
    const double P = p_term(s, p);
    if (!(a > 0.0) || !(P > 0.0))
        throw std::domain_error("scale_invariant_quotient: zero state");
    const double q = p.q;
    return (0.5 - 1.0 / (2.0 * q)) * std::pow(a, q / (q - 1.0)) / std::pow(P, 1.0 / (q - 1.0));
}

} // namespace cnls
