#include "cnls/minimize.hpp"

#include "cnls/operators.hpp"
#include "cnls/scalar.hpp"
#include "cnls/symmetrization.hpp"
#include "cnls/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cnls {

const char* to_string(Classification c) {
    switch (c) {
    case Classification::nontrivial: return "nontrivial";
    case Classification::trivial_u: return "trivial_u";
    case Classification::trivial_v: return "trivial_v";
    }
    return "unknown";
}

namespace {

// Push a component into the admissible set: nonnegative, Dirichlet boundary,
// nonincreasing in r (weighted isotone regression on the DOF range).
void sanitize_component(RadialField& f) {
    f.values.back() = 0.0;
    f = monotone_projection(f).field;
}

void sanitize(StatePair& s) {
    sanitize_component(s.u);
    sanitize_component(s.v);
}

// J = (1/2 - 1/(2q)) a (a/P)^{1/(q-1)}: the on-manifold energy of the
// Nehari-rescaled state, evaluated without actually rescaling.
double quotient_from(const EnergyBreakdown& br, double q) {
    return (0.5 - 1.0 / (2.0 * q)) * br.omega_norm_sq *
           std::pow(br.omega_norm_sq / br.p_term, 1.0 / (q - 1.0));
}

} // namespace

DescentResult descend_from(const ProblemParams& p, StatePair seed, const MinimizerConfig& cfg) {
    const double q = p.q;
    const double csq = p.omega * p.omega;

    sanitize(seed);
    {
        EnergyBreakdown br = energy_and_tau(seed, p);
        if (!(br.p_term > 0.0))
            throw std::invalid_argument("descend_from: seed carries no nonlinear mass");
        const double t = nehari_projection_t(seed, p);
        scale_in_place(seed.u, t);
        scale_in_place(seed.v, t);
    }

    StatePair state = std::move(seed);
    double Jcur = energy_and_tau(state, p).energy; // on the manifold this is J
    double alpha = cfg.step_size;
    double gnorm = std::numeric_limits<double>::infinity();
    bool converged = false;
    int it = 0;

    const int N = state.u.size();
    for (; it < cfg.max_iter; ++it) {
        const StatePair g = energy_gradient(state, p);
        gnorm = std::sqrt(inner_w(g.u, g.u) + inner_w(g.v, g.v));
        const RadialField du = shifted_solve(g.u, 1.0);
        const RadialField dv = shifted_solve(g.v, csq);

        bool accepted = false;
        double Jn = 0.0;
        double a = alpha;
        for (int k = 0; k < 60 && a >= 1e-12; ++k, a *= 0.5) {
            StatePair cand = state;
            for (int i = 0; i < N; ++i) {
                cand.u.values[i] -= a * du.values[i];
                cand.v.values[i] -= a * dv.values[i];
            }
            sanitize(cand);
            const EnergyBreakdown br = energy_and_tau(cand, p);
            if (!(br.p_term > 0.0))
                continue;
            const double Jc = quotient_from(br, q);
            if (Jc < Jcur) {
                const double t = std::pow(br.omega_norm_sq / br.p_term,
                                          1.0 / (2.0 * q - 2.0));
                scale_in_place(cand.u, t);
                scale_in_place(cand.v, t);
                state = std::move(cand);
                Jn = Jc;
                alpha = std::min(a * 1.6, 4.0);
                accepted = true;
                break;
            }
        }

        if (!accepted) {
            // No further decrease representable: converged iff the gradient
            // already meets the residual target.
            converged = gnorm < cfg.tol_residual;
            break;
        }

        const double rel = (Jcur - Jn) / std::max(1.0, std::fabs(Jcur));
        Jcur = Jn;
        if (gnorm < cfg.tol_residual && rel < cfg.tol_energy) {
            converged = true;
            ++it;
            break;
        }
    }

    // Kill scaling drift, then report the gradient at the final state.
    const double t = nehari_projection_t(state, p);
    scale_in_place(state.u, t);
    scale_in_place(state.v, t);
    const StatePair g = energy_gradient(state, p);

    DescentResult out;
    out.J = energy_and_tau(state, p).energy;
    out.state = std::move(state);
    out.grad_norm = std::sqrt(inner_w(g.u, g.u) + inner_w(g.v, g.v));
    out.iterations = it;
    out.converged = converged;
    return out;
}

Classification classify_components(const StatePair& s, double floor) {
    const double nu = lp_norm_p(s.u, 2.0);
    const double nv = lp_norm_p(s.v, 2.0);
    if (nu == 0.0 && nv == 0.0)
        throw std::invalid_argument("classify_components: zero state");
    if (nv < floor * nu)
        return Classification::trivial_v;
    if (nu < floor * nv)
        return Classification::trivial_u;
    return Classification::nontrivial;
}

GroundStateReport minimize_ground_state(const ProblemParams& p, const GridPtr& grid,
                                        const MinimizerConfig& cfg) {
    const ValidationResult vr = validate_params(p);
    if (!vr.valid)
        throw std::invalid_argument("minimize_ground_state: " + vr.reason);

    const ScalarGroundState u0 = solve_scalar_profile(p.q, 1.0, grid);
    const ScalarGroundState v0 = solve_scalar_profile(p.q, p.omega * p.omega, grid);

    // Seeds biased toward each semitrivial branch, plus the mixed trial pair.
    const double eps = 0.05;
    std::vector<StatePair> seeds;
    {
        StatePair s{u0.profile, v0.profile};
        scale_in_place(s.v, eps);
        seeds.push_back(std::move(s));
    }
    {
        StatePair s{u0.profile, v0.profile};
        scale_in_place(s.u, eps);
        seeds.push_back(std::move(s));
    }
    if (cfg.restarts >= 3)
        seeds.push_back(build_trial_state(p, 1.0, u0).state);

    const int nseeds = std::max(1, std::min<int>(cfg.restarts, static_cast<int>(seeds.size())));

    GroundStateReport rep;
    double bestJ = std::numeric_limits<double>::infinity();
    int total_iter = 0;
    bool have_best = false;
    DescentResult best;
    for (int k = 0; k < nseeds; ++k) {
        DescentResult res = descend_from(p, seeds[k], cfg);
        total_iter += res.iterations;
        rep.restart_energies.push_back(res.J);
        if (!have_best || res.J < bestJ) {
            bestJ = res.J;
            best = std::move(res);
            have_best = true;
        }
    }

    rep.m = best.J;
    rep.tau_residual = std::fabs(energy_and_tau(best.state, p).tau);
    rep.el_residual = best.grad_norm;
    rep.classification = classify_components(best.state, cfg.component_floor);
    rep.iterations = total_iter;
    rep.restarts_used = nseeds;
    rep.converged = best.converged;
    rep.state = std::move(best.state);
    return rep;
}

VerificationReport verify_ground_state(const GroundStateReport& report, const ProblemParams& p,
                                       double tol_residual) {
    VerificationReport out;
    const StatePair& s = report.state;
    const EnergyBreakdown br = energy_and_tau(s, p);

    out.tau_rel = std::fabs(br.tau) / br.omega_norm_sq;
    out.tau_ok = out.tau_rel <= 1e-8;

    // Lagrange-multiplier check: the gradient minus its component along the
    // scaling direction (the tau direction) must vanish at a manifold
    // critical point.
    const StatePair g = energy_gradient(s, p);
    const double sdot = inner_w(g.u, s.u) + inner_w(g.v, s.v);
    const double snorm2 = inner_w(s.u, s.u) + inner_w(s.v, s.v);
    const double c = (snorm2 > 0.0) ? sdot / snorm2 : 0.0;
    double acc = 0.0;
    const RadialGrid& gr = *s.u.grid;
    for (int i = 0; i < gr.num_points; ++i) {
        const double ru = g.u.values[i] - c * s.u.values[i];
        const double rv = g.v.values[i] - c * s.v.values[i];
        acc += gr.w[i] * (ru * ru + rv * rv);
    }
    out.residual = std::sqrt(acc);
    out.residual_ok = out.residual <= tol_residual;

    if (report.classification == Classification::trivial_v) {
        const ScalarGroundState u0 = solve_scalar_profile(p.q, 1.0, s.u.grid);
        double d = 0.0;
        for (int i = 0; i < gr.num_points; ++i)
            d = std::max(d, std::fabs(s.u.values[i] - u0.profile.values[i]));
        out.profile_dist = d;
        out.profile_ok = d <= 1e-3;
    } else {
        out.profile_dist = 0.0;
        out.profile_ok = true;
    }

    const double via_norm = (0.5 - 1.0 / (2.0 * p.q)) * br.omega_norm_sq;
    out.identity_rel = std::fabs(br.energy - via_norm) /
                       std::max(std::fabs(br.energy), 1e-300);
    out.identity_ok = out.identity_rel <= 1e-8;
    return out;
}

} // namespace cnls
