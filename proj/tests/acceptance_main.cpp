// Runs the end-to-end acceptance checks; --criterion N selects one (default all).
#include "cnls/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

int main(int argc, char** argv) {
    int criterion = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            criterion = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }
    if (criterion < 0 || criterion > 12) {
        std::fprintf(stderr, "criterion must be in 0..12\n");
        return 2;
    }
    const auto results = cnls::run_acceptance(criterion);
    cnls::print_results(results);
    return cnls::all_pass(results) ? 0 : 1;
}
