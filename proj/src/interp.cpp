#include "cnls/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cnls {

MonotoneCubic::MonotoneCubic(const std::vector<double>& x, const std::vector<double>& y)
    : x_(x), y_(y), d_(x.size(), 0.0) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n)
        throw std::invalid_argument("MonotoneCubic: need >= 2 matching nodes");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(x_[i + 1] > x_[i]))
            throw std::invalid_argument("MonotoneCubic: abscissa not increasing");

    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        delta[i] = (y_[i + 1] - y_[i]) / h[i];
    }

    // Interior slopes: weighted harmonic mean when secants agree in sign,
    // 0 at local extrema (Fritsch-Carlson).  End slopes: one-sided secant.
    d_[0] = delta[0];
    d_[n - 1] = delta[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d_[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            d_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    // Clamp end slopes so the first/last pieces stay monotone.
    for (std::size_t e : {std::size_t{0}, n - 1}) {
        const double del = (e == 0) ? delta[0] : delta[n - 2];
        if (del == 0.0)
            d_[e] = 0.0;
        else if (d_[e] / del < 0.0)
            d_[e] = 0.0;
        else if (std::fabs(d_[e]) > 3.0 * std::fabs(del))
            d_[e] = 3.0 * del;
    }
}

double MonotoneCubic::operator()(double xq) const {
    if (xq < x_.front() || xq > x_.back())
        return 0.0;
    // locate piece: largest i with x_[i] <= xq
    const auto it = std::upper_bound(x_.begin(), x_.end(), xq);
    std::size_t i = static_cast<std::size_t>(it - x_.begin());
    i = (i == 0) ? 0 : i - 1;
    if (i + 1 >= x_.size())
        i = x_.size() - 2;

    const double h = x_[i + 1] - x_[i];
    const double t = (xq - x_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * y_[i] + h10 * h * d_[i] + h01 * y_[i + 1] + h11 * h * d_[i + 1];
}

} // namespace cnls
