#include <hopfv/frt.hpp>
#include <iostream>

using namespace hopfv;
using namespace hopfv::detail;

static void show_fp(const FreePoly& p, const PresentationPtr& g) {
    if (p.empty()) {
        std::cout << "  0\n";
        return;
    }
    for (const auto& [w, c] : p) {
        std::cout << "  (" << c.to_string() << ")*";
        if (w.empty()) std::cout << "1";
        for (auto l : w) std::cout << g->name(letter_rank(l)) << " ";
        std::cout << "\n";
    }
}

int main(int argc, char** argv) {
    int N = argc > 1 ? std::atoi(argv[1]) : 3;
    ReduceOptions opts;
    PresentationPtr G = build_quantum_poincare(N);
    PolyMatrix P = poincare_matrix(N);
    PolyMatrix R = rep_r_wedge(N, opts);

    auto scalar_of = [&](const NCPolynomial& p) {
        ZSeries s(N);
        for (const auto& [w, c] : p.terms())
            if (w.empty()) s += c;
        return s;
    };
    auto fp_of_product = [&](const NCPolynomial& a, const NCPolynomial& b, const ZSeries& s,
                             FreePoly& dst, bool negate) {
        if (s.is_zero()) return;
        for (const auto& [wa, ca] : a.terms())
            for (const auto& [wb, cb] : b.terms()) {
                Word w;
                w.reserve(wa.size() + wb.size());
                w.insert(w.end(), wa.begin(), wa.end());
                w.insert(w.end(), wb.begin(), wb.end());
                ZSeries c = s * ca * cb;
                fp_add(dst, std::move(w), negate ? -c : c);
            }
    };
    // dump raw equations containing the unknown (x1, L00) = ranks (17, 0)
    int dumped = 0;
    for (unsigned i = 0; i < 5 && dumped < 2; ++i)
        for (unsigned k = 0; k < 5 && dumped < 2; ++k)
            for (unsigned j = 0; j < 5 && dumped < 2; ++j)
                for (unsigned l = 0; l < 5 && dumped < 2; ++l) {
                    FreePoly e;
                    for (unsigned m = 0; m < 5; ++m)
                        for (unsigned n = 0; n < 5; ++n) {
                            fp_of_product(P.at(m, j), P.at(n, l),
                                          scalar_of(R.at(i * 5 + k, m * 5 + n)), e, false);
                            fp_of_product(P.at(k, n), P.at(i, m),
                                          scalar_of(R.at(m * 5 + n, j * 5 + l)), e, true);
                        }
                    bool has = false;
                    for (const auto& [w, c] : e)
                        if (w.size() == 2 && letter_rank(w[0]) == 17 && letter_rank(w[1]) == 0)
                            has = true;
                    if (!has) continue;
                    ++dumped;
                    std::cout << "entry (" << i << k << ")(" << j << l << ") raw:\n";
                    show_fp(e, G);
                }
    return 0;
}
