#pragma once

#include "cnls/field.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace cnls {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Smooth decaying random field: a few Gaussian bumps with random centers,
// widths and signed amplitudes.  Deterministic under a fixed engine.
RadialField random_smooth_field(const GridPtr& grid, std::mt19937_64& rng);

// Closed-form and algebraic identities; < 30 s.
std::vector<CheckResult> run_fast_suite();

// The twelve end-to-end criteria; criterion = 0 runs all, 1..12 selects one.
// Criteria 9-11 record their solver runs so criterion 12 can audit them; when
// 12 is selected alone the required runs are repeated internally.
std::vector<CheckResult> run_acceptance(int criterion = 0);

bool all_pass(const std::vector<CheckResult>& results);
void print_results(const std::vector<CheckResult>& results);

} // namespace cnls
