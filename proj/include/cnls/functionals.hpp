#pragma once

#include "cnls/field.hpp"
#include "cnls/params.hpp"

namespace cnls {

struct EnergyBreakdown {
    double omega_norm_sq = 0.0; // ||u||^2 + ||Du||^2 + omega^2||v||^2 + ||Dv||^2
    double p_term = 0.0;        // ||u||_{2q}^{2q} + ||v||_{2q}^{2q} + 2b||uv||_q^q
    double energy = 0.0;        // omega_norm_sq/2 - p_term/(2q)
    double tau = 0.0;           // omega_norm_sq - p_term
};

double omega_norm_sq(const StatePair& s, const ProblemParams& p);
double p_term(const StatePair& s, const ProblemParams& p);
EnergyBreakdown energy_and_tau(const StatePair& s, const ProblemParams& p);

// sign(x) |x|^a, with the value 0 at x = 0 (removable for a > 0)
double signed_pow(double x, double a);

// The exact gradient of the discrete energy w.r.t. the quadrature inner
// product, i.e. the residual fields
//   (-Lap u + u - |u|^{2q-2}u - b|v|^q|u|^{q-2}u,
//    -Lap v + omega^2 v - |v|^{2q-2}v - b|u|^q|v|^{q-2}v).
// Components with zero quadrature weight (node 0 for n >= 2) are returned 0.
StatePair energy_gradient(const StatePair& s, const ProblemParams& p);

// t = (omega_norm_sq / p_term)^{1/(2q-2)}; tau(t s) = 0 to machine precision.
// Throws std::domain_error for the zero state / p_term <= 0.
double nehari_projection_t(const StatePair& s, const ProblemParams& p);

// (1/2 - 1/(2q)) * omega_norm_sq for a state with tau ~ 0.  Throws
// std::domain_error when |tau| > 1e-8 * omega_norm_sq.
double on_manifold_energy(const StatePair& s, const ProblemParams& p);

// J(s) = (1/2 - 1/(2q)) a^{q/(q-1)} / P^{1/(q-1)} = I(t s); scale invariant.
double scale_invariant_quotient(const StatePair& s, const ProblemParams& p);

} // namespace cnls
