#include <cstdio>

#include "hopfv/frt.hpp"

using namespace hopfv;

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 3;
    PresentationPtr G = build_quantum_poincare(n);
    TensorSpace sp = TensorSpace::plain(G);
    ReduceOptions opts;
    PolyMatrix P = poincare_matrix(n);
    PolyMatrix R = rep_r_wedge(n, opts);
    PolyMatrix P1 = kron(P, mat_identity(5, n), sp, opts);
    PolyMatrix P2 = kron(mat_identity(5, n), P, sp, opts);
    PolyMatrix lhs = mat_mul(mat_mul(R, P1, sp, opts), P2, sp, opts);
    PolyMatrix rhs = mat_mul(mat_mul(P2, P1, sp, opts), R, sp, opts);
    PolyMatrix res = mat_sub(lhs, rhs);
    for (unsigned i = 0; i < 25; ++i)
        for (unsigned j = 0; j < 25; ++j)
            if (!res.at(i, j).is_zero())
                std::printf("entry (%u=%u,%u)(%u=%u,%u):\n  %s\n", i, i / 5, i % 5, j, j / 5,
                            j % 5, poly_to_string(res.at(i, j), sp).c_str());
    return 0;
}
