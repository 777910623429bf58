#pragma once

#include <vector>

namespace cnls {

// Monotonicity-preserving cubic Hermite interpolant (Fritsch-Carlson
// limited slopes) on a strictly increasing abscissa.  Evaluation outside
// [x_front, x_back] returns 0 — callers interpolate exponentially decaying
// profiles whose tail is below solver tolerance.
class MonotoneCubic {
public:
    MonotoneCubic(const std::vector<double>& x, const std::vector<double>& y);

    double operator()(double xq) const;

private:
    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> d_; // node slopes
};

} // namespace cnls
