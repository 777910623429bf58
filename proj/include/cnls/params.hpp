#pragma once

#include <string>

namespace cnls {

// Problem data for the coupled system
//   -Lap u + u       = |u|^{2q-2}u + b|v|^q|u|^{q-2}u
//   -Lap v + omega^2 v = |v|^{2q-2}v + b|u|^q|v|^{q-2}v
struct ProblemParams {
    int n = 1;          // spatial dimension, radial reduction
    double q = 2.0;     // nonlinearity exponent, q > 1
    double b = 0.0;     // coupling constant, b >= 0
    double omega = 1.0; // frequency ratio, omega >= 1
};

struct ValidationResult {
    bool valid = true;
    std::string reason; // empty when valid
};

// n in {1,2,3}; q > 1; strict subcriticality q < n/(n-2) for n = 3;
// omega >= 1; b >= 0.
ValidationResult validate_params(const ProblemParams& p);

// Worst admissible exponent for dimension n (infinity encoded as a huge value
// for n <= 2).
double subcritical_limit(int n);

} // namespace cnls
