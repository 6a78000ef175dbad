#include <cstdio>

#include "hopfv/frt.hpp"

using namespace hopfv;
using namespace hopfv::gen::qpoincare;

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 3;
    PresentationPtr G = build_quantum_poincare(n);
    TensorSpace sp = TensorSpace::plain(G);
    ReduceOptions opts;
    auto g = [&](unsigned r) { return NCPolynomial::generator(0, r, n); };
    auto jac = [&](unsigned a, unsigned b, unsigned c) {
        NCPolynomial A = g(a), B = g(b), C = g(c);
        NCPolynomial r = nc_commutator(nc_commutator(A, B, sp, opts), C, sp, opts);
        r += nc_commutator(nc_commutator(B, C, sp, opts), A, sp, opts);
        r += nc_commutator(nc_commutator(C, A, sp, opts), B, sp, opts);
        return r;
    };
    auto show = [&](unsigned a, unsigned b, unsigned c) {
        NCPolynomial r = jac(a, b, c);
        std::printf("jac(%s,%s,%s) = %s\n", G->name(a).c_str(), G->name(b).c_str(),
                    G->name(c).c_str(), poly_to_string(r, sp).c_str());
    };
    show(lam(1, 3), xp, x1);
    show(lam(0, 0), x1, x2);
    show(lam(0, 3), xp, xm);
    // raw commutators for inspection
    auto showc = [&](unsigned a, unsigned b) {
        std::printf("[%s,%s] = %s\n", G->name(a).c_str(), G->name(b).c_str(),
                    poly_to_string(nc_commutator(g(a), g(b), sp, opts), sp).c_str());
    };
    showc(xp, lam(1, 3));
    showc(x1, lam(1, 3));
    return 0;
}
