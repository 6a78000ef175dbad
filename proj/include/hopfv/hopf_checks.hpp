#pragma once

#include <chrono>
#include <functional>
#include <random>

#include "hopfv/report.hpp"
#include "hopfv/tensor.hpp"

namespace hopfv {

struct HopfCheckConfig {
    int order = 6;
    bool coassociativity = true;
    bool counit_axiom = true;
    bool antipode_axiom = true;
    bool coproduct_morphism = true;
    int sample_monomials = 8; // random degree-2 products fed through the axioms
    std::uint64_t seed = 1;
    int compare_degree = -1; // restrict residuals to this total degree, if >= 0
    ReduceOptions reduce;
    // Optional exact zero test for presentations whose rewrite rules only
    // orient their relations one way: a nonzero normal form counts as zero
    // when this returns true (membership in the relation ideal).
    std::function<bool(const NCPolynomial&)> residual_vanishes;
};

namespace detail {

inline NCPolynomial degree_view(const NCPolynomial& p, int d) {
    return d >= 0 ? p.filtered_by_degree(d) : p;
}

inline void record(Report& rep, const std::string& id, const NCPolynomial& residual,
                   double ms, const std::string& note = "", bool ideal_pass = false) {
    CheckResult r;
    r.id = id;
    r.pass = residual.is_zero() || ideal_pass;
    r.residual_terms = static_cast<int>(residual.terms().size());
    r.residual_order = residual.is_zero() ? -1 : residual.max_z_order();
    r.wall_ms = ms;
    r.note = note;
    rep.add(std::move(r));
}

} // namespace detail

// Verifies the coalgebra and Hopf axioms on every generator plus a sample of
// degree-2 monomials. For degree-capped presentations residuals are compared
// below compare_degree, where the truncation is exact.
inline Report check_hopf_axioms(const PresentationPtr& pres, const HopfCheckConfig& cfg) {
    using clock = std::chrono::steady_clock;
    Report rep;
    rep.suite = "hopf:" + pres->label;
    auto t0 = clock::now();

    const int N = cfg.order;
    const int D = cfg.compare_degree;
    TensorSpace sp1 = TensorSpace::plain(pres);
    TensorSpace sp2 = TensorSpace::power(pres, 2);
    TensorSpace sp3 = TensorSpace::power(pres, 3);

    struct Subject {
        std::string name;
        NCPolynomial value;
    };
    std::vector<Subject> subjects;
    for (unsigned r = 0; r < pres->size(); ++r)
        subjects.push_back({pres->name(r), NCPolynomial::generator(0, r, N)});

    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<unsigned> pick(0, static_cast<unsigned>(pres->size()) - 1);
    for (int k = 0; k < cfg.sample_monomials; ++k) {
        unsigned i = pick(rng), j = pick(rng);
        NCPolynomial m = nc_multiply(NCPolynomial::generator(0, i, N),
                                     NCPolynomial::generator(0, j, N), sp1, cfg.reduce);
        subjects.push_back({pres->name(i) + "*" + pres->name(j), m});
    }

    auto timed = [&](auto&& fn) {
        auto s = clock::now();
        NCPolynomial res = fn();
        bool ideal = !res.is_zero() && cfg.residual_vanishes && cfg.residual_vanishes(res);
        double ms = std::chrono::duration<double, std::milli>(clock::now() - s).count();
        return std::tuple<NCPolynomial, double, bool>(std::move(res), ms, ideal);
    };
    auto emit = [&](const std::string& id, const NCPolynomial& res, double ms, bool ideal) {
        detail::record(rep, id, res, ms, ideal ? "vanishes modulo the relation ideal" : "",
                       ideal);
    };

    for (const auto& sub : subjects) {
        if (cfg.coassociativity) {
            auto [res, ms, ideal] = timed([&] {
                NCPolynomial d = coproduct(sub.value, pres, N, cfg.reduce);
                NCPolynomial l = coproduct_on_slot(d, sp2, 0, N, cfg.reduce);
                NCPolynomial r = coproduct_on_slot(d, sp2, 1, N, cfg.reduce);
                return detail::degree_view(l - r, D);
            });
            emit("coassoc:" + sub.name, res, ms, ideal);
        }
        if (cfg.counit_axiom && pres->has_counit()) {
            auto [res, ms, ideal] = timed([&] {
                NCPolynomial d = coproduct(sub.value, pres, N, cfg.reduce);
                NCPolynomial l = counit_on_slot(d, sp2, 0, N, cfg.reduce);
                NCPolynomial r = counit_on_slot(d, sp2, 1, N, cfg.reduce);
                return detail::degree_view((l - sub.value) + (r - sub.value), D);
            });
            emit("counit:" + sub.name, res, ms, ideal);
        }
        if (cfg.antipode_axiom && pres->has_antipode()) {
            auto [res, ms, ideal] = timed([&] {
                NCPolynomial d = coproduct(sub.value, pres, N, cfg.reduce);
                NCPolynomial gl = antipode_on_slot(d, sp2, 0, N, cfg.reduce);
                NCPolynomial gr = antipode_on_slot(d, sp2, 1, N, cfg.reduce);
                NCPolynomial l = multiply_slots(gl, sp2, 0, N, cfg.reduce);
                NCPolynomial r = multiply_slots(gr, sp2, 0, N, cfg.reduce);
                NCPolynomial target = NCPolynomial::scalar(poly_counit(sub.value, pres, N));
                return detail::degree_view((l - target) + (r - target), D);
            });
            emit("antipode:" + sub.name, res, ms, ideal);
        }
    }

    if (cfg.coproduct_morphism) {
        // Delta([a,b]) = [Delta(a), Delta(b)] for every generator pair.
        for (unsigned i = 0; i < pres->size(); ++i)
            for (unsigned j = 0; j < i; ++j) {
                auto [res, ms, ideal] = timed([&] {
                    NCPolynomial a = NCPolynomial::generator(0, i, N);
                    NCPolynomial b = NCPolynomial::generator(0, j, N);
                    NCPolynomial lhs = coproduct(nc_commutator(a, b, sp1, cfg.reduce), pres, N, cfg.reduce);
                    NCPolynomial da = coproduct(a, pres, N, cfg.reduce);
                    NCPolynomial db = coproduct(b, pres, N, cfg.reduce);
                    NCPolynomial rhs = nc_commutator(da, db, sp2, cfg.reduce);
                    return detail::degree_view(lhs - rhs, D);
                });
                emit("coproduct_morphism:" + pres->name(i) + "," + pres->name(j), res, ms,
                     ideal);
            }
    }

    rep.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return rep;
}

} // namespace hopfv
