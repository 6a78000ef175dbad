#include <iostream>
#include "hopfv/rmatrix.hpp"
using namespace hopfv;
static void show(const Report& r) {
    int bad = 0;
    for (const auto& c : r.checks) {
        if (!c.pass) { ++bad; std::cout << "  FAIL " << c.id << " terms=" << c.residual_terms << "\n"; }
    }
    std::cout << r.suite << ": " << r.checks.size() << " checks, failed " << bad
              << ", " << r.wall_ms << "ms\n";
}
int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 3;
    int ni = argc > 2 ? std::atoi(argv[2]) : 2;
    int nq = argc > 3 ? std::atoi(argv[3]) : 2;
    show(check_rmatrix(n));
    show(check_intertwining(ni));
    show(check_qybe(nq));
    return 0;
}
