#pragma once

#include "cnls/field.hpp"
#include "cnls/params.hpp"
#include "cnls/scalar.hpp"

#include <optional>
#include <string>

namespace cnls {

// C_{omega,n,q} = 1/2 [1 + (n/2)(1-1/q) + (1/omega^2)(1 - (n/2)(1-1/q))]^q
//                 * omega^{2q - n(q-1)} - 1
double constant_C(const ProblemParams& p);

// D_{omega,q} = ((2^q-1)/2) omega^{1+q/2} - (1/2) omega^{-q/2}   (n = 1 scope)
// Throws std::domain_error outside q >= 2, omega >= 1.
double constant_D(double q, double omega);

// ((1+eps^2)^q - 1)/(2 eps^q) omega^{q-(n/2)(q-2)} - (1/2) eps^q omega^{(n/2-1)q}
double sufficient_bound(double q, double omega, int n, double eps);

// The coupling prefactor ((1+eps^2)^q - 1)/(2 eps^q) alone.
double coupling_prefactor(double q, double eps);

struct EpsOptimum {
    double eps_opt = 0.0;
    double value = 0.0;       // objective at eps_opt
    bool at_boundary = false; // infimum hit the search-domain edge, not attained
};

// Minimize sufficient_bound over eps in [1e-3, 10]: coarse log scan, then
// golden section to 1e-8 in eps.  For q <= 2 the prefactor infimum sits at
// eps -> 0 and the boundary is flagged.
EpsOptimum optimize_epsilon(double q, double omega, int n);

// Same search applied to coupling_prefactor alone (for q > 2 the minimizer is
// interior: at q = 3, eps^2 = (sqrt5 - 1)/2).
EpsOptimum optimize_prefactor(double q);

struct ThresholdReport {
    ProblemParams params;
    double c_const = 0.0;
    std::optional<double> d_const; // n = 1, q >= 2 only
    double eps_opt = 0.0;
    double b_opt = 0.0;
    std::string note;
};

ThresholdReport threshold_report(const ProblemParams& p);

struct TrialState {
    double x = 0.0;      // scaling placing the pair on the manifold
    double theta = 0.0;  // v-component ratio
    StatePair state;     // (x u0, x theta v0)
    double x_lower = 0.0; // bracket for x^{2q-2} from the coupling-term bounds
    double x_upper = 0.0;
    double energy = 0.0; // I(state)
};

// theta = eps * omega^{(n - 2q/(q-1))/2}; v0 by omega_rescale onto u0's grid;
// x from the exact quadrature values (so tau(state) = 0 to machine), bracket
// endpoints from the two coupling-term bounds.
TrialState build_trial_state(const ProblemParams& p, double eps, const ScalarGroundState& u0);

struct SufficiencyReport {
    double lhs = 0.0; // x^2 (1 + theta^2 omega^{2q/(q-1)-n})
    bool beats_semitrivial = false; // lhs <= 1, i.e. I(trial) <= I(u0, 0)
    TrialState trial;
};

SufficiencyReport check_sufficiency(const ProblemParams& p, double eps,
                                    const ScalarGroundState& u0);

} // namespace cnls
