#pragma once

#include "cnls/field.hpp"
#include "cnls/params.hpp"

namespace cnls {

struct ScalarGroundState {
    RadialField profile;
    double q = 2.0;
    double mass_coeff = 1.0;   // 1 for u0, omega^2 for the v-companion
    double energy = 0.0;       // I of (profile, 0)
    double residual_norm = 0.0; // sup |(-Lap + c) u - u^{2q-1}| (pointwise stencil)
    bool converged = true;
    int iterations = 0;
};

// Closed form for n = 1: u0(x) = q^{1/(2(q-1))} sech^{1/(q-1)}((q-1) x).
// Throws std::domain_error for q <= 1.
ScalarGroundState explicit_soliton_1d(double q, const GridPtr& grid);

// Ground state of -Lap u + c u = u^{2q-1} by descent on the scale-invariant
// quotient (single component).  c = 1 reproduces u0; c = omega^2 solves the
// v-companion equation directly.
ScalarGroundState solve_scalar_profile(double q, double mass_coeff, const GridPtr& grid,
                                       int max_iter = 20000, double tol_residual = 1e-8,
                                       double tol_energy = 1e-12);

ScalarGroundState solve_scalar_ground_state(const ProblemParams& p, const GridPtr& grid);

// v0(r) = omega^{1/(q-1)} u0(omega r), by monotone interpolation of the
// solved profile (0 beyond its domain).
RadialField omega_rescale(const ScalarGroundState& u0, const ProblemParams& p,
                          const GridPtr& grid);

} // namespace cnls
