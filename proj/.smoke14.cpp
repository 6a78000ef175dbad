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
    const std::pair<unsigned, unsigned> watch{17u, 0u};

    struct LinEq {
        std::map<std::pair<unsigned, unsigned>, ZSeries> A;
        FreePoly b;
    };
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
    std::vector<LinEq> eqs;
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
                    if (e.empty()) continue;
                    LinEq q;
                    for (const auto& [w, c] : e) {
                        if (w.size() == 2 && letter_rank(w[0]) > letter_rank(w[1])) {
                            unsigned hi = letter_rank(w[0]), lo = letter_rank(w[1]);
                            q.A[{hi, lo}] += c;
                            fp_add(q.b, Word{make_letter(0, lo), make_letter(0, hi)}, -c);
                        } else {
                            fp_add(q.b, w, -c);
                        }
                    }
                    for (auto it = q.A.begin(); it != q.A.end();)
                        it = it->second.is_zero() ? q.A.erase(it) : std::next(it);
                    q.b = contraction_span().reduce(q.b);
                    if (!q.A.empty() || !q.b.empty()) eqs.push_back(std::move(q));
                }
    std::cout << "equations: " << eqs.size() << "\n";

    std::vector<std::pair<std::pair<unsigned, unsigned>, LinEq>> pivots;
    std::size_t inconsistent = 0;
    auto eliminate = [&](LinEq& e) {
        for (const auto& [u, pe] : pivots) {
            auto it = e.A.find(u);
            if (it == e.A.end()) continue;
            ZSeries f = it->second * series_inverse(pe.A.at(u));
            e.A.erase(it);
            for (const auto& [v, c] : pe.A) {
                if (v == u) continue;
                auto jt = e.A.try_emplace(v, ZSeries(N)).first;
                jt->second -= f * c;
                if (jt->second.is_zero()) e.A.erase(jt);
            }
            for (const auto& [w, c] : pe.b) fp_add(e.b, w, -(f * c));
        }
        e.b = contraction_span().reduce(e.b);
    };
    std::vector<LinEq> deferred;
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto& e : eqs) {
            eliminate(e);
            if (e.A.empty()) {
                if (!e.b.empty() && !orthogonality_oracle().vanishes(e.b)) ++inconsistent;
                continue;
            }
            auto pick = e.A.end();
            for (auto it = e.A.begin(); it != e.A.end(); ++it)
                if (it->second[0] != 0) {
                    pick = it;
                    break;
                }
            if (pick == e.A.end()) {
                deferred.push_back(std::move(e));
                continue;
            }
            if (pick->first == watch) {
                std::cout << "pivot registered for [x1, L00]; A:\n";
                for (const auto& [v, c] : e.A)
                    std::cout << "  (" << G->name(v.first) << "," << G->name(v.second)
                              << "): " << c.to_string() << "\n";
                std::cout << " b:\n";
                show_fp(e.b, G);
            }
            pivots.push_back({pick->first, std::move(e)});
            grew = true;
        }
        eqs = std::move(deferred);
        deferred.clear();
        if (eqs.empty()) break;
    }
    std::cout << "pivots: " << pivots.size() << " inconsistent flagged so far: " << inconsistent
              << "\n";

    std::map<std::pair<unsigned, unsigned>, FreePoly> chi;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const auto& [u, e] = *it;
        FreePoly val = e.b;
        bool blocked = false;
        for (const auto& [v, c] : e.A) {
            if (v == u) continue;
            auto jt = chi.find(v);
            if (jt == chi.end()) {
                blocked = true;
                break;
            }
            for (const auto& [w, vc] : jt->second) fp_add(val, w, -(c * vc));
        }
        if (blocked) {
            std::cout << "blocked backsub for (" << G->name(u.first) << "," << G->name(u.second)
                      << ")\n";
            continue;
        }
        ZSeries inv = series_inverse(e.A.at(u));
        FreePoly scaled;
        for (const auto& [w, c] : val) fp_add(scaled, w, inv * c);
        if (u == watch) {
            std::cout << "backsub for watch: A size " << e.A.size() << " inv "
                      << inv.to_string() << "\n val:\n";
            show_fp(val, G);
            std::cout << " scaled:\n";
            show_fp(scaled, G);
        }
        chi[u] = contraction_span().reduce(scaled);
    }
    std::cout << "chi entries: " << chi.size() << "\n";
    std::cout << "local chi(x1,L00):\n";
    show_fp(chi[{17u, 0u}], G);

    auto sol = solve_exchange_system(P, R, N);
    std::cout << "library chi(x1,L00):\n";
    show_fp(sol.chi[{17u, 0u}], G);
    return 0;
}
