#include <hopfv/frt.hpp>
#include <iostream>

using namespace hopfv;
using namespace hopfv::detail;

int main() {
    int N = 3;
    PresentationPtr G = build_quantum_poincare(N);
    auto L = [](unsigned r) { return make_letter(0, r); };
    FreePoly p;
    fp_add(p, Word{L(4)}, ZSeries::monomial(1, 1, N));                 // z*L10
    fp_add(p, Word{L(1), L(5)}, -ZSeries::monomial(1, 1, N));          // -z*L01 L11
    fp_add(p, Word{L(2), L(6)}, -ZSeries::monomial(1, 1, N));          // -z*L02 L12
    fp_add(p, Word{L(3), L(4)}, -ZSeries::monomial(1, 1, N));          // -z*L03 L10
    fp_add(p, Word{L(3), L(7)}, -ZSeries::monomial(1, 1, N));          // -z*L03 L13
    FreePoly r = contraction_span().reduce(p);
    std::cout << "reduced terms: " << r.size() << "\n";
    for (const auto& [w, c] : r) {
        std::cout << "  (" << c.to_string() << ")*";
        if (w.empty()) std::cout << "1";
        for (auto l : w) std::cout << G->name(letter_rank(l)) << " ";
        std::cout << "\n";
    }
    // single quadratic, definitely not a pivot of anything: L01 L02
    FreePoly q;
    fp_add(q, Word{L(1), L(2)}, ZSeries::one(N));
    auto rq = contraction_span().reduce(q);
    std::cout << "L01 L02 -> " << rq.size() << " terms\n";
    return 0;
}
