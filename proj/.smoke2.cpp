#include <chrono>
#include <iostream>

#include "hopfv/algebras.hpp"

using namespace hopfv;
using clk = std::chrono::steady_clock;

static double ms(clk::time_point a, clk::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

int main() {
    const int N = 6;
    auto t0 = clk::now();
    PresentationPtr U = build_uzp31(N);
    auto t1 = clk::now();
    Report jac = check_jacobi(U, N);
    auto t2 = clk::now();
    std::cout << "build: " << ms(t0, t1) << "ms, jacobi(" << jac.checks.size()
              << "): " << ms(t1, t2) << "ms failed=" << jac.failed_count() << "\n";
    HopfCheckConfig cfg;
    cfg.order = N;
    Report h = check_hopf_axioms(U, cfg);
    auto t3 = clk::now();
    std::cout << "hopf(" << h.checks.size() << "): " << ms(t2, t3)
              << "ms failed=" << h.failed_count() << "\n";
    Report cas = check_casimir(N);
    auto t4 = clk::now();
    std::cout << "casimir: " << ms(t3, t4) << "ms failed=" << cas.failed_count() << "\n";
    Report phi = check_phi_morphism(N);
    auto t5 = clk::now();
    std::cout << "phi: " << ms(t4, t5) << "ms failed=" << phi.failed_count() << "\n";
    Report cy = check_classical_yang_baxter(N);
    auto t6 = clk::now();
    std::cout << "cybe: " << ms(t5, t6) << "ms failed=" << cy.failed_count() << "\n";
    return 0;
}
