#include "doctest.h"

#include "cnls/verify.hpp"

#include <random>

using namespace cnls;

TEST_SUITE("verify") {

TEST_CASE("random field generator is deterministic under the engine") {
    const GridPtr g = make_grid(1, 25.0, 512);
    std::mt19937_64 a(123), b(123), c(124);
    const RadialField fa = random_smooth_field(g, a);
    const RadialField fb = random_smooth_field(g, b);
    const RadialField fc = random_smooth_field(g, c);
    bool same = true, diff = false;
    for (int i = 0; i < g->num_points; ++i) {
        same = same && fa.values[i] == fb.values[i];
        diff = diff || fa.values[i] != fc.values[i];
    }
    CHECK(same);
    CHECK(diff);
}

TEST_CASE("fast suite is green") {
    const auto results = run_fast_suite();
    for (const CheckResult& r : results) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
    CHECK(all_pass(results));
}

} // TEST_SUITE
