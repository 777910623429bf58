#include "cnls/params.hpp"

#include <limits>

namespace cnls {

double subcritical_limit(int n) {
    if (n <= 2) return std::numeric_limits<double>::max();
    return static_cast<double>(n) / (n - 2);
}

ValidationResult validate_params(const ProblemParams& p) {
    if (p.n < 1 || p.n > 3) return {false, "n must be in {1, 2, 3}"};
    if (!(p.q > 1.0)) return {false, "q > 1 violated"};
    if (p.n == 3 && !(p.q < subcritical_limit(3)))
        return {false, "q < n/(n-2) violated"};
    if (!(p.omega >= 1.0)) return {false, "omega >= 1 violated"};
    if (!(p.b >= 0.0)) return {false, "b >= 0 violated"};
    return {};
}

} // namespace cnls
