#pragma once

#include "cnls/field.hpp"

namespace cnls {

struct RearrangedField {
    RadialField field;
    bool is_monotone = false; // nonnegative and nonincreasing in r
};

struct ComparisonReport {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    // check_hardy_littlewood also reports the q-norm consequence
    double lhs_q = 0.0;
    double rhs_q = 0.0;
    bool holds_q = true;
};

// Decreasing rearrangement of |f| w.r.t. the weighted nodal measure.  The
// sorted magnitudes form a step function of cumulative measure; each output
// node receives the quadratic mean of that step function over its own weight
// cell, so the L^2 norm is preserved to roundoff for every field and every
// dimension.  When the sorted cells align with the grid cells (for n = 1 this
// holds whenever |f| peaks at r = 0, since only the two end weights differ
// from the interior ones) the construction degenerates to a permutation of
// nodal values and every L^p norm is exact; otherwise other norms agree up to
// the cell resolution.
RearrangedField decreasing_rearrangement(const RadialField& f);

// Projection of |f| onto nonnegative nonincreasing fields in the weighted L^2
// inner product (weighted pool-adjacent-violators).
RearrangedField monotone_projection(const RadialField& f);

// In-place weighted PAVA onto nonincreasing sequences.
void pava_nonincreasing(double* y, const double* w, int len);

// ||D f*||_2 <= ||D f||_2 (+ tol)
ComparisonReport check_polya_szego(const RadialField& f);

// int |f g| <= int f* g* (+ tol), and ||fg||_q <= ||f* g*||_q
ComparisonReport check_hardy_littlewood(const RadialField& f, const RadialField& g,
                                        double q = 2.0);

} // namespace cnls
