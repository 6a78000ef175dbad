#include <cstdio>

#include "hopfv/rep.hpp"

using namespace hopfv;

static void dump(const Report& r) {
    std::printf("%s: %zu checks, failed %zu, %.0fms\n", r.suite.c_str(), r.checks.size(),
                r.failed_count(), r.wall_ms);
    for (const auto& c : r.checks)
        if (!c.pass)
            std::printf("  FAIL %s terms=%zu ord=%d\n", c.id.c_str(), c.residual_terms,
                        c.residual_order);
}

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 4;
    dump(check_rep_relations(n));
    dump(check_rep_rmatrix(n));
    dump(check_rep_t(n));
    return 0;
}
