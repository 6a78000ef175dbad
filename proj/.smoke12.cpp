#include <hopfv/frt.hpp>
#include <iostream>

using namespace hopfv;
using namespace hopfv::detail;

int main(int argc, char** argv) {
    int N = argc > 1 ? std::atoi(argv[1]) : 3;
    ReduceOptions opts;
    PresentationPtr G = build_quantum_poincare(N);
    PolyMatrix P = poincare_matrix(N);
    PolyMatrix R = rep_r_wedge(N, opts);

    // stored table as a substitution map (empty value = commuting pair)
    std::map<std::pair<unsigned, unsigned>, FreePoly> known;
    for (unsigned q = 0; q < G->size(); ++q)
        for (unsigned p = 0; p < q; ++p) {
            FreePoly v;
            if (const NCPolynomial* t = G->commutator(q, p))
                for (const auto& [w, c] : t->terms()) fp_add(v, w, c);
            known[{q, p}] = std::move(v);
        }

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
    int bad = 0;
    for (unsigned i = 0; i < 5; ++i)
        for (unsigned k = 0; k < 5; ++k)
            for (unsigned j = 0; j < 5; ++j)
                for (unsigned l = 0; l < 5; ++l) {
                    FreePoly e;
                    for (unsigned m = 0; m < 5; ++m)
                        for (unsigned n = 0; n < 5; ++n) {
                            fp_of_product(P.at(m, j), P.at(n, l),
                                          scalar_of(R.at(i * 5 + k, m * 5 + n)), e, false);
                            fp_of_product(P.at(k, n), P.at(i, m),
                                          scalar_of(R.at(m * 5 + n, j * 5 + l)), e, true);
                        }
                    e = fp_reduce(e, known);
                    e = contraction_span().reduce(e);
                    if (e.empty()) continue;
                    if (orthogonality_oracle().vanishes(e)) continue;
                    ++bad;
                    if (bad <= 8) {
                        std::cout << "entry (" << i << k << ")(" << j << l << "):\n";
                        for (const auto& [w, c] : e) {
                            std::cout << "  (" << c.to_string() << ")*";
                            if (w.empty()) std::cout << "1";
                            for (auto le : w) std::cout << G->name(letter_rank(le)) << " ";
                            std::cout << "\n";
                        }
                    }
                }
    std::cout << "entries nonzero modulo ideal: " << bad << "\n";
    return 0;
}
