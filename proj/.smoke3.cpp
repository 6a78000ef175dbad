#include <chrono>
#include <iostream>

#include "hopfv/duality.hpp"

using namespace hopfv;
using clk = std::chrono::steady_clock;

static void run(int N, int D) {
    auto t0 = clk::now();
    DualityContext ctx(N, D);
    Report rep = ctx.run_suite();
    auto t1 = clk::now();
    std::cout << "duality N=" << N << " D=" << D << ": " << rep.checks.size() << " checks, failed "
              << rep.failed_count() << ", "
              << std::chrono::duration<double, std::milli>(t1 - t0).count() << "ms, tensor size "
              << ctx.structure_tensor().entries.size() << "\n";
    for (const auto& c : rep.checks)
        if (!c.pass) std::cout << "  FAIL " << c.id << " bad=" << c.residual_terms << "\n";
}

int main() {
    run(4, 4);
    run(5, 5);
    Report t = check_t_matrix(4, 6);
    std::cout << "tmatrix: failed " << t.failed_count() << " in " << t.wall_ms << "ms\n";
    for (const auto& c : t.checks)
        if (!c.pass) std::cout << "  FAIL " << c.id << "\n";
    run(6, 6);
    return 0;
}
