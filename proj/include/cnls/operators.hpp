#pragma once

#include "cnls/field.hpp"

namespace cnls {

// Weighted quadrature: sigma_n * int f r^{n-1} dr ~ sum w_i f_i.
double integrate(const RadialField& f);
double inner_w(const RadialField& f, const RadialField& g);

// sum w_i |f_i|^p  (the p-th power of the L^p norm; callers mostly want the
// power, so that is what we return; take the root at the call site if needed)
double lp_norm_pow(const RadialField& f, double p);
double lp_norm_p(const RadialField& f, double p); // (sum w |f|^p)^{1/p}

// Stiffness form: (A f)_i with A = D^T M_stiff D / h^2.  f^T A f equals
// h1_seminorm_sq exactly, which is what makes the discrete energy gradient
// exact.
void apply_stiffness(const RadialField& f, std::vector<double>& out);

// sum over cells mstiff_c * ((f_{c+1}-f_c)/h)^2
double h1_seminorm_sq(const RadialField& f);

// Variational Laplacian W^{-1} A (negated so the result approximates
// Lap f = f'' + (n-1)/r f').  At r=0 the symmetric limit 2 n (f_1 - f_0)/h^2
// is used; for n >= 2 that node is not a DOF but the value is still reported.
RadialField apply_laplacian(const RadialField& f);

// Independent classical stencil (central f'' + (n-1)/r central f'), used for
// pointwise Euler-Lagrange residuals; the variational residual vanishes at
// any discrete minimizer by construction and would be a vacuous check.
RadialField pointwise_laplacian(const RadialField& f);

// Solve (A + c W) x = W g on the DOF range with x(r_max) = 0; for n >= 2 the
// node-0 entry of x is filled by even extrapolation.  Thomas algorithm.
RadialField shifted_solve(const RadialField& g, double c);

} // namespace cnls
