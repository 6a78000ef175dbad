#include <cstdio>

#include "hopfv/frt.hpp"

using namespace hopfv;

static void dump(const Report& r) {
    std::printf("%s: %zu checks, failed %zu, %.0fms\n", r.suite.c_str(), r.checks.size(),
                r.failed_count(), r.wall_ms);
    for (const auto& c : r.checks) {
        if (!c.pass)
            std::printf("  FAIL %s terms=%zu ord=%d note=%s\n", c.id.c_str(), c.residual_terms,
                        c.residual_order, c.note.c_str());
        else if (!c.note.empty())
            std::printf("  pass %s (%s)\n", c.id.c_str(), c.note.c_str());
    }
}

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 4;
    int which = argc > 2 ? std::atoi(argv[2]) : 0;
    if (which == 0 || which == 1) dump(check_frt_exchange(n));
    if (which == 0 || which == 2) dump(derive_frt_relations(n));
    if (which == 0 || which == 3) dump(check_quantum_poincare_hopf(n));
    if (which == 0 || which == 4) dump(check_poisson_limit(n));
    return 0;
}
