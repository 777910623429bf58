#pragma once

#include <memory>
#include <vector>

namespace cnls {

// Uniform radial mesh r_i = i*h on [0, r_max] carrying everything the
// discrete calculus needs:
//   w       quadrature weights for sigma_n * int f(r) r^{n-1} dr
//   mcell   exact masses of the cells [r_i, r_{i+1}] (same measure)
//   mstiff  cell masses used by the stiffness form; for n >= 2 cell 0 is
//           dropped, node 0 is not a degree of freedom (its value is derived
//           by even extrapolation) and w[0] = 0.
//
// The interior weights are matched to the stiffness form so that W^{-1}A is a
// consistent discretization of -(f'' + (n-1)/r f') at every interior node,
// the discrete gradient of the discrete energy is exact, and sum(w) equals
// the ball measure sigma_n r_max^n / n to machine precision (last weight is
// the remainder).
struct RadialGrid {
    int n = 1;
    double r_max = 0.0;
    int num_points = 0;
    double h = 0.0;
    double sigma = 0.0;               // 2, 2*pi, 4*pi
    std::vector<double> r;            // nodes
    std::vector<double> w;            // quadrature weights, size N
    std::vector<double> mcell;        // exact cell masses, size N-1
    std::vector<double> mstiff;       // stiffness cell masses, size N-1

    int dof_lo() const { return n >= 2 ? 1 : 0; }   // first descent DOF
    int dof_hi() const { return num_points - 1; }   // one past last (Dirichlet)
    double ball_measure() const;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

// Throws std::invalid_argument on r_max <= 0, num_points < 16, n not in {1,2,3}.
GridPtr make_grid(int n, double r_max, int num_points);

bool same_grid(const RadialGrid& a, const RadialGrid& b);

// Default meshes: (30, 4096) for n=1, (20, 2048) for n=2,3.
void default_grid_settings(int n, double& r_max, int& num_points);

} // namespace cnls
