#include <chrono>
#include <iostream>

#include "hopfv/duality.hpp"

using namespace hopfv;
using clk = std::chrono::steady_clock;

static double ms(clk::time_point a) {
    return std::chrono::duration<double, std::milli>(clk::now() - a).count();
}

int main(int argc, char** argv) {
    int N = argc > 1 ? std::atoi(argv[1]) : 3;
    int D = argc > 2 ? std::atoi(argv[2]) : 3;
    DualityContext ctx(N, D);
    auto t0 = clk::now();
    ctx.structure_tensor();
    std::cout << "tensor build N=" << N << " D=" << D << ": " << ms(t0) << "ms, entries "
              << ctx.structure_tensor().entries.size() << "\n";
    Report rep;
    t0 = clk::now();
    ctx.families_into(rep);
    std::cout << "families: " << ms(t0) << "ms\n";
    t0 = clk::now();
    ctx.relations_into(rep);
    std::cout << "relations: " << ms(t0) << "ms\n";
    t0 = clk::now();
    ctx.associativity_into(rep);
    std::cout << "assoc: " << ms(t0) << "ms\n";
    std::cout << "failed: " << rep.failed_count() << " of " << rep.checks.size() << "\n";
    for (const auto& c : rep.checks)
        if (!c.pass) std::cout << "  FAIL " << c.id << " bad=" << c.residual_terms << "\n";
    return 0;
}
