#include <hopfv/frt.hpp>
#include <iostream>

using namespace hopfv;

static std::string show(const NCPolynomial& p, const PresentationPtr& g) {
    if (p.terms().empty()) return "  0\n";
    std::string s;
    for (const auto& [w, c] : p.terms()) {
        s += "  (" + c.to_string() + ")*";
        if (w.empty()) s += "1";
        for (auto l : w) s += g->name(letter_rank(l)) + " ";
        s += "\n";
    }
    return s;
}

int main(int argc, char** argv) {
    int N = argc > 1 ? std::atoi(argv[1]) : 3;
    ReduceOptions opts;
    PresentationPtr G = build_quantum_poincare(N);
    TensorSpace sp = TensorSpace::plain(G);
    const auto& oracle = detail::orthogonality_oracle();
    const auto& span = detail::contraction_span();

    // sanity: the twenty contraction quadrics vanish under the oracle and
    // reduce to zero in the span
    {
        using namespace gen::qpoincare;
        int bad = 0;
        auto L = [](unsigned r) { return make_letter(0, r); };
        for (unsigned mu = 0; mu < 4; ++mu)
            for (unsigned rho = mu; rho < 4; ++rho) {
                detail::FreePoly f1, f2;
                detail::fp_add(f1, Word{L(lam(mu, 0)), L(lam(rho, 0))}, ZSeries::one(N));
                detail::fp_add(f2, Word{L(mu), L(rho)}, ZSeries::one(N));
                for (unsigned k = 1; k < 4; ++k) {
                    detail::fp_add(f1, Word{L(lam(mu, k)), L(lam(rho, k))}, -ZSeries::one(N));
                    detail::fp_add(f2, Word{L(lam(k, mu)), L(lam(k, rho))}, -ZSeries::one(N));
                }
                if (mu == rho) {
                    detail::fp_add(f1, Word{}, ZSeries::constant(-sgn(mu), N));
                    detail::fp_add(f2, Word{}, ZSeries::constant(-sgn(mu), N));
                }
                if (!oracle.vanishes(f1) || !oracle.vanishes(f2)) ++bad, std::cout << "oracle misses quadric " << mu << rho << "\n";
                if (!span.reduce(f1).empty() || !span.reduce(f2).empty()) ++bad, std::cout << "span misses quadric " << mu << rho << "\n";
            }
        // and a non-member must not vanish: L00 - 2
        detail::FreePoly g;
        detail::fp_add(g, Word{make_letter(0, 0)}, ZSeries::one(N));
        detail::fp_add(g, Word{}, ZSeries::constant(-2, N));
        if (oracle.vanishes(g)) ++bad, std::cout << "oracle false positive\n";
        // det-odd probe: sum_k L0k L1k - L00 L10 is in the ideal
        detail::FreePoly h;
        using namespace gen::qpoincare;
        for (unsigned k = 1; k < 4; ++k)
            detail::fp_add(h, Word{L(lam(0, k)), L(lam(1, k))}, ZSeries::one(N));
        detail::fp_add(h, Word{L(lam(0, 0)), L(lam(1, 0))}, -ZSeries::one(N));
        if (!oracle.vanishes(h)) ++bad, std::cout << "oracle misses reversed contraction\n";
        std::cout << "oracle sanity: " << (bad ? "FAIL" : "ok") << "\n";
    }

    auto sol = detail::solve_exchange_system(poincare_matrix(N), rep_r_wedge(N, opts), N);
    std::cout << "solved " << sol.chi.size() << " pairs, inconsistent=" << sol.inconsistent
              << "\n";
    int shown = 0;
    for (unsigned q = 0; q < G->size(); ++q)
        for (unsigned p = 0; p < q; ++p) {
            NCPolynomial der;
            auto it = sol.chi.find({q, p});
            if (it != sol.chi.end())
                for (const auto& [w, c] : it->second) der.add_term(w, c);
            NCPolynomial diff = der;
            NCPolynomial stored;
            if (const NCPolynomial* t = G->commutator(q, p)) stored = *t;
            diff -= stored;
            auto nd = normal_order(diff, sp, opts);
            if (nd.is_zero()) continue;
            if (oracle.vanishes(nd)) continue; // equal modulo the ideal
            ++shown;
            std::cout << "== [" << G->name(q) << ", " << G->name(p) << "]\n";
            std::cout << " derived:\n" << show(der, G);
            std::cout << " stored:\n" << show(stored, G);
        }
    std::cout << "pairs differing modulo the ideal: " << shown << "\n";
    return 0;
}
