#pragma once

#include "cnls/field.hpp"
#include "cnls/functionals.hpp"
#include "cnls/params.hpp"

#include <string>
#include <vector>

namespace cnls {

struct MinimizerConfig {
    int max_iter = 20000;
    double step_size = 1.0;        // initial descent step
    double tol_energy = 1e-10;     // relative energy-change stop
    double tol_residual = 1e-6;    // gradient-norm stop
    double component_floor = 1e-3; // relative L^2 threshold for a trivial component
    int restarts = 3;
};

enum class Classification { nontrivial, trivial_u, trivial_v };

const char* to_string(Classification c);

struct GroundStateReport {
    StatePair state;          // on the manifold, in the monotone cone
    double m = 0.0;           // minimal energy
    double tau_residual = 0.0;
    double el_residual = 0.0; // w-norm of grad I after the final rescale
    Classification classification = Classification::nontrivial;
    int iterations = 0;
    int restarts_used = 0;
    bool converged = true;
    std::vector<double> restart_energies; // J reached by each restart
};

// Descent on the scale-invariant quotient J: per accepted iteration a
// preconditioned gradient step, componentwise absolute value, weighted
// monotone projection, Nehari renormalization, with backtracking line search.
// Restarts cover both semitrivial branches and the mixed trial state; the
// best result wins.
GroundStateReport minimize_ground_state(const ProblemParams& p, const GridPtr& grid,
                                        const MinimizerConfig& cfg = {});

// Same descent from one given seed (also the scalar-solver workhorse).
struct DescentResult {
    StatePair state;
    double J = 0.0;
    double grad_norm = 0.0;
    int iterations = 0;
    bool converged = true;
};
DescentResult descend_from(const ProblemParams& p, StatePair seed, const MinimizerConfig& cfg);

Classification classify_components(const StatePair& s, double floor);

struct VerificationReport {
    bool tau_ok = false;       // |tau| <= 1e-8 * omega_norm_sq
    bool residual_ok = false;  // grad I, tau-direction removed, below tol
    bool profile_ok = false;   // trivial_v only: u close to the solved u0
    bool identity_ok = false;  // the two on-manifold energy expressions agree
    double tau_rel = 0.0;
    double residual = 0.0;
    double profile_dist = 0.0;
    double identity_rel = 0.0;
    bool all() const { return tau_ok && residual_ok && profile_ok && identity_ok; }
};

VerificationReport verify_ground_state(const GroundStateReport& report, const ProblemParams& p,
                                       double tol_residual = 1e-6);

} // namespace cnls
