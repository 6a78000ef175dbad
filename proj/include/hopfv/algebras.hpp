#pragma once

#include "hopfv/hopf_checks.hpp"

namespace hopfv {

// Generator ranks, in PBW order (lower rank sorts left in normal words).
namespace gen {
namespace uzp31 {
enum : unsigned { E2 = 0, E1, Pp, K3, P1, P2, Pm, F1, F2, J3 };
}
// Dual coordinates carry an 'h' prefix in generator names.
namespace funzg {
enum : unsigned { he2 = 0, he1, hap, hk3, ha1, ha2 };
}
// Grouplike presentation of the dual: g+ and g- are the exponentials exp(+-hk3).
namespace funzg_gl {
enum : unsigned { he2 = 0, he1, hap, gp, gm, ha1, ha2 };
}
} // namespace gen

namespace detail {

// sum_{k=0..kmax} coef * base^k / k! * z^(zpow + k*zstep) * [pre run^k post].
// The run letter must sort between pre and post so every emitted word is
// already normal. kmax < 0 means unbounded (requires zstep > 0 to terminate).
inline NCPolynomial exp_run(int order, int kmax, const Rational& coef, int zpow, int zstep,
                            const Word& pre, unsigned slot, unsigned rank, const Rational& base,
                            const Word& post) {
    if (kmax < 0 && zstep <= 0) fail(errc::non_terminating, "unbounded exponential run");
    NCPolynomial out;
    Rational pw = coef;
    Integer fact = 1;
    for (int k = 0;; ++k) {
        if (k > 0) {
            pw *= base;
            fact *= k;
        }
        int zp = zpow + k * zstep;
        if (zp > order || (kmax >= 0 && k > kmax)) break;
        Word w = pre;
        for (int t = 0; t < k; ++t) w.push_back(make_letter(slot, rank));
        w.insert(w.end(), post.begin(), post.end());
        out.add_term(std::move(w), ZSeries::monomial(pw / Rational(fact), zp, order));
    }
    return out;
}

} // namespace detail

// Deformed translation bracket sum_{k>=1} 2^(k-1)/k! z^(k-1) P+^k, the series
// (exp(2 z P+) - 1) / (2 z).
inline NCPolynomial translation_bracket_series(int order) {
    NCPolynomial s;
    Rational pw = 1;
    Integer fact = 1;
    for (int k = 1; k - 1 <= order; ++k) {
        fact *= k;
        Word w(static_cast<std::size_t>(k), make_letter(0, gen::uzp31::Pp));
        s.add_term(std::move(w), ZSeries::monomial(pw / Rational(fact), k - 1, order));
        pw *= 2;
    }
    return s;
}

// Deformed (3+1) null-plane Poincare algebra: ten generators, z-graded
// deformation with P+ exponentials, full Hopf structure.
inline PresentationPtr build_uzp31(int order) {
    using namespace gen::uzp31;
    const int N = order;
    auto P = std::make_shared<Presentation>();
    P->label = "uzp31";
    P->grading = Grading::z;
    for (const char* n : {"E2", "E1", "P+", "K3", "P1", "P2", "P-", "F1", "F2", "J3"})
        P->add_generator(n);

    auto L = [](unsigned r) { return make_letter(0, r); };
    auto g = [&](unsigned r) { return NCPolynomial::generator(0, r, N); };
    const ZSeries one = ZSeries::one(N);
    const ZSeries z1 = ZSeries::monomial(1, 1, N);
    const ZSeries z2 = ZSeries::monomial(2, 1, N);

    NCPolynomial S = translation_bracket_series(N);

    // Squared transverse momenta shifted by z, shared by two brackets.
    NCPolynomial PmK;
    PmK.add_term({L(Pm)}, one);
    PmK.add_term({L(P1), L(P1)}, z1);
    PmK.add_term({L(P2), L(P2)}, z1);

    P->set_commutator(K3, Pp, S);
    P->set_commutator(Pm, K3, PmK);
    P->set_commutator(K3, E1, detail::exp_run(N, -1, 1, 0, 1, {L(E1)}, 0, Pp, 2, {}));
    P->set_commutator(K3, E2, detail::exp_run(N, -1, 1, 0, 1, {L(E2)}, 0, Pp, 2, {}));
    {
        NCPolynomial f1k = g(F1);
        f1k.add_term({L(K3), L(P1)}, z2);
        P->set_commutator(F1, K3, f1k);
        NCPolynomial f2k = g(F2);
        f2k.add_term({L(K3), L(P2)}, z2);
        P->set_commutator(F2, K3, f2k);
    }
    P->set_commutator(J3, P1, -g(P2));
    P->set_commutator(J3, P2, g(P1));
    P->set_commutator(J3, E1, -g(E2));
    P->set_commutator(J3, E2, g(E1));
    P->set_commutator(J3, F1, -g(F2));
    P->set_commutator(J3, F2, g(F1));
    P->set_commutator(P1, E1, -S);
    P->set_commutator(P2, E2, -S);
    P->set_commutator(Pm, E1, -g(P1));
    P->set_commutator(Pm, E2, -g(P2));
    P->set_commutator(F1, P1, PmK);
    P->set_commutator(F2, P2, PmK);
    P->set_commutator(F1, Pp, g(P1));
    P->set_commutator(F2, Pp, g(P2));
    P->set_commutator(F1, E1, -g(K3));
    P->set_commutator(F2, E2, -g(K3));
    P->set_commutator(F2, E1, detail::exp_run(N, -1, -1, 0, 1, {}, 0, Pp, 2, {L(J3)}));
    P->set_commutator(F1, E2, detail::exp_run(N, -1, 1, 0, 1, {}, 0, Pp, 2, {L(J3)}));
    {
        NCPolynomial ff;
        ff.add_term({L(P1), L(F2)}, ZSeries::monomial(-2, 1, N));
        ff.add_term({L(P2), L(F1)}, z2);
        P->set_commutator(F2, F1, ff);
    }

    P->enable_coproduct();
    P->enable_counit();
    P->enable_antipode();

    auto primitive = [&](unsigned r) {
        NCPolynomial d;
        d.add_term({make_letter(1, r)}, one);
        d.add_term({make_letter(0, r)}, one);
        return d;
    };
    // X (x) exp(2zP+) with the slot-1 exponential; extra slot-1 letters go in
    // pre (rank below P+) or post (rank above P+).
    auto co_twist = [&](const Rational& coef, int zpow, Word pre, Word post) {
        return detail::exp_run(N, -1, coef, zpow, 1, std::move(pre), 1, Pp, 2, std::move(post));
    };

    for (unsigned r : {E2, E1, Pp, J3}) P->set_coproduct(r, primitive(r));
    for (unsigned r : {P1, P2, Pm}) {
        NCPolynomial d = primitive(r);
        d.add_term({make_letter(0, r)}, -one); // replace X (x) 1 tail by the twist
        d += co_twist(1, 0, {make_letter(0, r)}, {});
        P->set_coproduct(r, d);
    }
    {
        NCPolynomial d;
        d.add_term({make_letter(1, F1)}, one);
        d += co_twist(1, 0, {L(F1)}, {});
        d += co_twist(-2, 1, {L(Pm), make_letter(1, E1)}, {});
        d += co_twist(-2, 1, {L(P2)}, {make_letter(1, J3)});
        P->set_coproduct(F1, d);
    }
    {
        NCPolynomial d;
        d.add_term({make_letter(1, F2)}, one);
        d += co_twist(1, 0, {L(F2)}, {});
        d += co_twist(-2, 1, {L(Pm), make_letter(1, E2)}, {});
        d += co_twist(2, 1, {L(P1)}, {make_letter(1, J3)});
        P->set_coproduct(F2, d);
    }
    {
        NCPolynomial d;
        d.add_term({make_letter(1, K3)}, one);
        d += co_twist(1, 0, {L(K3)}, {});
        d += co_twist(-2, 1, {L(P1), make_letter(1, E1)}, {});
        d += co_twist(-2, 1, {L(P2), make_letter(1, E2)}, {});
        P->set_coproduct(K3, d);
    }

    for (unsigned r = 0; r < P->size(); ++r) P->set_counit(r, ZSeries(N));

    // Antipodes: the non-primitive ones are normal-ordered with the engine so
    // the stored table matches the defining products literally.
    TensorSpace sp = TensorSpace::plain(P);
    auto mul = [&](const NCPolynomial& a, const NCPolynomial& b) { return nc_multiply(a, b, sp); };
    NCPolynomial expm = detail::exp_run(N, -1, 1, 0, 1, {}, 0, Pp, -2, {});
    for (unsigned r : {E2, E1, Pp, J3}) P->set_antipode(r, -g(r));
    for (unsigned r : {P1, P2, Pm}) P->set_antipode(r, -mul(g(r), expm));
    P->set_antipode(F1, -mul(g(F1) + z2 * mul(g(Pm), g(E1)) + z2 * mul(g(P2), g(J3)), expm));
    P->set_antipode(F2, -mul(g(F2) + z2 * mul(g(Pm), g(E2)) - z2 * mul(g(P1), g(J3)), expm));
    P->set_antipode(K3, -mul(g(K3) + z2 * mul(g(P1), g(E1)) + z2 * mul(g(P2), g(E2)), expm));
    return P;
}

// Deformed (2+1) null-plane subalgebra: the first six uzp31 generators with
// the restricted tables.
inline PresentationPtr build_uzg(int order) {
    using namespace gen::uzp31;
    const int N = order;
    auto P = std::make_shared<Presentation>();
    P->label = "uzg";
    P->grading = Grading::z;
    for (const char* n : {"E2", "E1", "P+", "K3", "P1", "P2"}) P->add_generator(n);

    auto L = [](unsigned r) { return make_letter(0, r); };
    auto g = [&](unsigned r) { return NCPolynomial::generator(0, r, N); };
    const ZSeries one = ZSeries::one(N);
    const ZSeries z2 = ZSeries::monomial(2, 1, N);

    NCPolynomial S = translation_bracket_series(N);
    P->set_commutator(K3, Pp, S);
    P->set_commutator(K3, E1, detail::exp_run(N, -1, 1, 0, 1, {L(E1)}, 0, Pp, 2, {}));
    P->set_commutator(K3, E2, detail::exp_run(N, -1, 1, 0, 1, {L(E2)}, 0, Pp, 2, {}));
    P->set_commutator(P1, E1, -S);
    P->set_commutator(P2, E2, -S);

    P->enable_coproduct();
    P->enable_counit();
    P->enable_antipode();

    auto primitive = [&](unsigned r) {
        NCPolynomial d;
        d.add_term({make_letter(1, r)}, one);
        d.add_term({make_letter(0, r)}, one);
        return d;
    };
    for (unsigned r : {E2, E1, Pp}) P->set_coproduct(r, primitive(r));
    for (unsigned r : {P1, P2}) {
        NCPolynomial d;
        d.add_term({make_letter(1, r)}, one);
        d += detail::exp_run(N, -1, 1, 0, 1, {make_letter(0, r)}, 1, Pp, 2, {});
        P->set_coproduct(r, d);
    }
    {
        NCPolynomial d;
        d.add_term({make_letter(1, K3)}, one);
        d += detail::exp_run(N, -1, 1, 0, 1, {L(K3)}, 1, Pp, 2, {});
        d += detail::exp_run(N, -1, -2, 1, 1, {L(P1), make_letter(1, E1)}, 1, Pp, 2, {});
        d += detail::exp_run(N, -1, -2, 1, 1, {L(P2), make_letter(1, E2)}, 1, Pp, 2, {});
        P->set_coproduct(K3, d);
    }
    for (unsigned r = 0; r < P->size(); ++r) P->set_counit(r, ZSeries(N));

    TensorSpace sp = TensorSpace::plain(P);
    auto mul = [&](const NCPolynomial& a, const NCPolynomial& b) { return nc_multiply(a, b, sp); };
    NCPolynomial expm = detail::exp_run(N, -1, 1, 0, 1, {}, 0, Pp, -2, {});
    for (unsigned r : {E2, E1, Pp}) P->set_antipode(r, -g(r));
    for (unsigned r : {P1, P2}) P->set_antipode(r, -mul(g(r), expm));
    P->set_antipode(K3, -mul(g(K3) + z2 * mul(g(P1), g(E1)) + z2 * mul(g(P2), g(E2)), expm));
    return P;
}

// Dual function algebra on six coordinates, graded by word degree with an
// explicit cap; exponentials of hk3 carry no z, so the degree cap is the
// truncation. Coalgebra only (no antipode table).
inline PresentationPtr build_funzg(int order, int degree_cap) {
    using namespace gen::funzg;
    const int N = order;
    const int D = degree_cap;
    auto P = std::make_shared<Presentation>();
    P->label = "funzg";
    P->grading = Grading::degree;
    P->degree_cap = D;
    for (const char* n : {"he2", "he1", "ha+", "hk3", "ha1", "ha2"}) P->add_generator(n);

    auto L = [](unsigned r) { return make_letter(0, r); };
    const ZSeries one = ZSeries::one(N);
    const ZSeries z2 = ZSeries::monomial(2, 1, N);

    // 2 z (exp(hk3) - 1)
    NCPolynomial expk_m1 = detail::exp_run(N, D, 2, 1, 0, {}, 0, hk3, 1, {});
    expk_m1.add_term({}, -z2);
    P->set_commutator(hk3, hap, expk_m1);
    P->set_commutator(ha1, hap, detail::exp_run(N, D - 1, 2, 1, 0, {}, 0, hk3, 1, {L(ha1)}));
    P->set_commutator(ha2, hap, detail::exp_run(N, D - 1, 2, 1, 0, {}, 0, hk3, 1, {L(ha2)}));
    P->set_commutator(ha1, he1, -expk_m1);
    P->set_commutator(ha2, he2, -expk_m1);

    P->enable_coproduct();
    P->enable_counit();
    auto primitive = [&](unsigned r) {
        NCPolynomial d;
        d.add_term({make_letter(1, r)}, one);
        d.add_term({make_letter(0, r)}, one);
        return d;
    };
    P->set_coproduct(hk3, primitive(hk3));
    P->set_coproduct(ha1, primitive(ha1));
    P->set_coproduct(ha2, primitive(ha2));
    for (unsigned r : {he1, he2}) {
        NCPolynomial d = detail::exp_run(N, D, 1, 0, 0, {}, 0, hk3, 1, {make_letter(1, r)});
        d.add_term({make_letter(0, r)}, one);
        P->set_coproduct(r, d);
    }
    {
        NCPolynomial d = detail::exp_run(N, D, 1, 0, 0, {}, 0, hk3, 1, {make_letter(1, hap)});
        d.add_term({make_letter(0, hap)}, one);
        d += detail::exp_run(N, D - 1, -1, 0, 0, {}, 0, hk3, 1, {L(ha1), make_letter(1, he1)});
        d += detail::exp_run(N, D - 1, -1, 0, 0, {}, 0, hk3, 1, {L(ha2), make_letter(1, he2)});
        P->set_coproduct(hap, d);
    }
    for (unsigned r = 0; r < P->size(); ++r) P->set_counit(r, ZSeries(N));
    return P;
}

// Same dual algebra with the hk3 exponentials adjoined as grouplike
// generators g+ g- = 1; every bracket is O(z), so plain z truncation is exact
// and no degree cap is needed.
inline PresentationPtr build_funzg_grouplike(int order) {
    using namespace gen::funzg_gl;
    const int N = order;
    auto P = std::make_shared<Presentation>();
    P->label = "funzg-grouplike";
    P->grading = Grading::z;
    for (const char* n : {"he2", "he1", "ha+", "g+", "g-", "ha1", "ha2"}) P->add_generator(n);

    auto L = [](unsigned r) { return make_letter(0, r); };
    const ZSeries one = ZSeries::one(N);
    const ZSeries z2 = ZSeries::monomial(2, 1, N);

    {
        NCPolynomial c; // [g+, ha+] = 2z (g+^2 - g+)
        c.add_term({L(gp), L(gp)}, z2);
        c.add_term({L(gp)}, -z2);
        P->set_commutator(gp, hap, c);
    }
    {
        NCPolynomial c; // [g-, ha+] = 2z (g- - 1)
        c.add_term({L(gm)}, z2);
        c.add_term({}, -z2);
        P->set_commutator(gm, hap, c);
    }
    for (unsigned r : {ha1, ha2}) {
        NCPolynomial c; // [ha_i, ha+] = 2z g+ ha_i
        c.add_term({L(gp), L(r)}, z2);
        P->set_commutator(r, hap, c);
    }
    {
        NCPolynomial c; // [ha_i, he_i] = -2z (g+ - 1)
        c.add_term({L(gp)}, -z2);
        c.add_term({}, z2);
        P->set_commutator(ha1, he1, c);
        P->set_commutator(ha2, he2, c);
    }
    P->add_pair_rule(gp, gm, NCPolynomial::one(N));

    P->enable_coproduct();
    P->enable_counit();
    auto primitive = [&](unsigned r) {
        NCPolynomial d;
        d.add_term({make_letter(1, r)}, one);
        d.add_term({make_letter(0, r)}, one);
        return d;
    };
    for (unsigned r : {gp, gm}) {
        NCPolynomial d;
        d.add_term({make_letter(0, r), make_letter(1, r)}, one);
        P->set_coproduct(r, d);
    }
    for (unsigned r : {he1, he2}) {
        NCPolynomial d;
        d.add_term({L(gp), make_letter(1, r)}, one);
        d.add_term({make_letter(0, r)}, one);
        P->set_coproduct(r, d);
    }
    P->set_coproduct(ha1, primitive(ha1));
    P->set_coproduct(ha2, primitive(ha2));
    {
        NCPolynomial d;
        d.add_term({L(gp), make_letter(1, hap)}, one);
        d.add_term({make_letter(0, hap)}, one);
        d.add_term({L(gp), L(ha1), make_letter(1, he1)}, -one);
        d.add_term({L(gp), L(ha2), make_letter(1, he2)}, -one);
        P->set_coproduct(hap, d);
    }
    for (unsigned r = 0; r < P->size(); ++r)
        P->set_counit(r, (r == gp || r == gm) ? ZSeries::one(N) : ZSeries(N));
    return P;
}

// z -> 0 limit of a series / polynomial / presentation.
inline ZSeries classical_limit(const ZSeries& s) { return ZSeries::constant(s[0], s.order()); }

inline NCPolynomial classical_limit(const NCPolynomial& p) {
    NCPolynomial out;
    for (const auto& [w, c] : p.terms()) {
        ZSeries c0 = classical_limit(c);
        if (!c0.is_zero()) out.add_term(w, c0);
    }
    return out;
}

inline PresentationPtr classical_presentation(const PresentationPtr& src) {
    auto P = std::make_shared<Presentation>();
    P->label = src->label + "-classical";
    P->grading = src->grading;
    P->degree_cap = src->degree_cap;
    for (unsigned r = 0; r < src->size(); ++r) P->add_generator(src->name(r));
    for (unsigned hi = 1; hi < src->size(); ++hi)
        for (unsigned lo = 0; lo < hi; ++lo)
            if (const NCPolynomial* c = src->commutator(hi, lo)) {
                NCPolynomial cl = classical_limit(*c);
                if (!cl.is_zero()) P->set_commutator(hi, lo, cl);
            }
    if (src->has_coproduct()) {
        P->enable_coproduct();
        for (unsigned r = 0; r < src->size(); ++r) P->set_coproduct(r, classical_limit(src->coproduct(r)));
    }
    if (src->has_counit()) {
        P->enable_counit();
        for (unsigned r = 0; r < src->size(); ++r) P->set_counit(r, classical_limit(src->counit(r)));
    }
    if (src->has_antipode()) {
        P->enable_antipode();
        for (unsigned r = 0; r < src->size(); ++r) P->set_antipode(r, classical_limit(src->antipode(r)));
    }
    for (const auto& pr : src->pair_rules()) P->add_pair_rule(pr.a, pr.b, classical_limit(pr.rhs));
    return P;
}

inline PresentationPtr make_algebra(const std::string& name, int order, int degree_cap) {
    if (name == "uzp31") return build_uzp31(order);
    if (name == "uzg") return build_uzg(order);
    if (name == "funzg") return build_funzg(order, degree_cap >= 0 ? degree_cap : order);
    if (name == "funzg-grouplike") return build_funzg_grouplike(order);
    if (name == "uzp31-classical") return classical_presentation(build_uzp31(order));
    fail(errc::unknown_presentation, "no algebra named '" + name + "'");
}

// Deformed mass-square invariant
//   P- (1 - exp(-2zP+))/z - exp(-2zP+) (P1^2 + P2^2).
inline NCPolynomial casimir_mass_squared(int order) {
    using namespace gen::uzp31;
    const int N = order;
    NCPolynomial c;
    Rational pw = 1;
    Integer fact = 1;
    for (int k = 1; k - 1 <= N; ++k) {
        pw *= -2;
        fact *= k;
        Word w(static_cast<std::size_t>(k), make_letter(0, Pp));
        w.push_back(make_letter(0, Pm));
        c.add_term(std::move(w), ZSeries::monomial(-pw / Rational(fact), k - 1, N));
    }
    auto L = [](unsigned r) { return make_letter(0, r); };
    c += detail::exp_run(N, -1, -1, 0, 1, {}, 0, Pp, -2, {L(P1), L(P1)});
    c += detail::exp_run(N, -1, -1, 0, 1, {}, 0, Pp, -2, {L(P2), L(P2)});
    return c;
}

// Classical r-matrix 2 (K3 ^ P+ + E1 ^ P1 + E2 ^ P2), a ^ b = a(x)b - b(x)a.
inline NCPolynomial classical_r_matrix(int order) {
    using namespace gen::uzp31;
    NCPolynomial r;
    const ZSeries two = ZSeries::constant(2, order);
    for (auto [a, b] : {std::pair<unsigned, unsigned>{K3, Pp}, {E1, P1}, {E2, P2}}) {
        r.add_term({make_letter(0, a), make_letter(1, b)}, two);
        r.add_term({make_letter(0, b), make_letter(1, a)}, -two);
    }
    return r;
}

// Images of the dual coordinates inside uzp31 (by funzg rank).
inline std::vector<NCPolynomial> phi_images(int order) {
    using namespace gen::uzp31;
    auto scaled = [&](const Rational& c, unsigned r) {
        return NCPolynomial::word_term({make_letter(0, r)}, ZSeries::monomial(c, 1, order));
    };
    return {scaled(2, P2), scaled(2, P1), scaled(-2, K3),
            scaled(2, Pp), scaled(-2, E1), scaled(-2, E2)};
}

namespace detail {

inline int max_letter_rank(const NCPolynomial& p) {
    int m = -1;
    for (const auto& [w, c] : p.terms())
        for (Letter l : w) m = std::max(m, static_cast<int>(letter_rank(l)));
    return m;
}

} // namespace detail

// The first six uzp31 generators close under bracket, coproduct, and
// antipode, and the standalone six-generator presentation is exactly the
// restriction.
inline Report check_subalgebra_closure(int order, const ReduceOptions& opts = {}) {
    Report rep;
    rep.suite = "subalgebra";
    PresentationPtr big = build_uzp31(order);
    PresentationPtr sub = build_uzg(order);
    TensorSpace sp = TensorSpace::plain(big);
    const unsigned six = sub->size();

    for (unsigned i = 0; i < six; ++i)
        for (unsigned j = 0; j < i; ++j) {
            NCPolynomial c = nc_commutator(NCPolynomial::generator(0, i, order),
                                           NCPolynomial::generator(0, j, order), sp, opts);
            CheckResult r;
            r.id = "closure:bracket:" + big->name(i) + "," + big->name(j);
            r.pass = detail::max_letter_rank(c) < static_cast<int>(six);
            r.residual_terms = r.pass ? 0 : c.term_count();
            rep.add(std::move(r));

            const NCPolynomial* a = big->commutator(i, j);
            const NCPolynomial* b = sub->commutator(i, j);
            NCPolynomial diff = (a ? *a : NCPolynomial()) - (b ? *b : NCPolynomial());
            detail::record(rep, "restriction:bracket:" + big->name(i) + "," + big->name(j), diff, 0);
        }
    for (unsigned r = 0; r < six; ++r) {
        CheckResult cl;
        cl.id = "closure:coalgebra:" + big->name(r);
        cl.pass = detail::max_letter_rank(big->coproduct(r)) < static_cast<int>(six) &&
                  detail::max_letter_rank(big->antipode(r)) < static_cast<int>(six);
        rep.add(std::move(cl));
        detail::record(rep, "restriction:coproduct:" + big->name(r),
                       big->coproduct(r) - sub->coproduct(r), 0);
        detail::record(rep, "restriction:antipode:" + big->name(r),
                       big->antipode(r) - sub->antipode(r), 0);
    }
    return rep;
}

// Centrality of the mass-square invariant and its exact classical limit.
inline Report check_casimir(int order, const ReduceOptions& opts = {}) {
    using clock = std::chrono::steady_clock;
    using namespace gen::uzp31;
    Report rep;
    rep.suite = "casimir";
    auto t0 = clock::now();
    PresentationPtr pres = build_uzp31(order);
    TensorSpace sp = TensorSpace::plain(pres);
    NCPolynomial C = casimir_mass_squared(order);

    for (unsigned r = 0; r < pres->size(); ++r) {
        auto s = clock::now();
        NCPolynomial res = nc_commutator(C, NCPolynomial::generator(0, r, order), sp, opts);
        detail::record(rep, "casimir:central:" + pres->name(r), res,
                       std::chrono::duration<double, std::milli>(clock::now() - s).count());
    }
    {
        NCPolynomial expect;
        expect.add_term({make_letter(0, Pp), make_letter(0, Pm)}, ZSeries::constant(2, order));
        expect.add_term({make_letter(0, P1), make_letter(0, P1)}, ZSeries::constant(-1, order));
        expect.add_term({make_letter(0, P2), make_letter(0, P2)}, ZSeries::constant(-1, order));
        detail::record(rep, "casimir:classical_limit", classical_limit(C) - expect, 0);
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return rep;
}

// The coordinate map into uzp31 is an algebra homomorphism and a coalgebra
// antihomomorphism.
inline Report check_phi_morphism(int order, const ReduceOptions& opts = {}) {
    using clock = std::chrono::steady_clock;
    Report rep;
    rep.suite = "phi";
    auto t0 = clock::now();
    const int N = order;
    PresentationPtr U = build_uzp31(N);
    PresentationPtr F = build_funzg(N, N); // image z-order >= degree, so cap N is exact
    TensorSpace u1 = TensorSpace::plain(U);
    TensorSpace u2 = TensorSpace::power(U, 2);
    std::vector<NCPolynomial> img = phi_images(N);

    auto phi_plain = [&](const NCPolynomial& p) {
        return apply_generator_map(p, u1, img, MapMode::homomorphism, opts);
    };
    auto phi_pair = [&](const NCPolynomial& p) {
        auto image = [&](Letter l) {
            unsigned s = letter_slot(l);
            return retag_slots(img[letter_rank(l)], u2, [s](unsigned) { return s; });
        };
        return map_letters(p, u2, image, nullptr, opts);
    };

    for (unsigned i = 0; i < F->size(); ++i)
        for (unsigned j = 0; j < i; ++j) {
            auto s = clock::now();
            const NCPolynomial* c = F->commutator(i, j);
            NCPolynomial lhs = c ? phi_plain(*c) : NCPolynomial();
            NCPolynomial rhs = nc_commutator(img[i], img[j], u1, opts);
            detail::record(rep, "phi:algebra:" + F->name(i) + "," + F->name(j), lhs - rhs,
                           std::chrono::duration<double, std::milli>(clock::now() - s).count());
        }
    for (unsigned r = 0; r < F->size(); ++r) {
        auto s = clock::now();
        NCPolynomial lhs = phi_pair(F->coproduct(r));
        NCPolynomial rhs = flip(coproduct(img[r], U, N, opts), u2, 0, 1);
        detail::record(rep, "phi:coalgebra:" + F->name(r), lhs - rhs,
                       std::chrono::duration<double, std::milli>(clock::now() - s).count());
        NCPolynomial cu = NCPolynomial::scalar(poly_counit(img[r], U, N) - F->counit(r).truncated(N));
        detail::record(rep, "phi:counit:" + F->name(r), cu, 0);
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return rep;
}

// Classical Yang-Baxter equation for the classical r-matrix, evaluated with
// z -> 0 brackets.
inline Report check_classical_yang_baxter(int order, const ReduceOptions& opts = {}) {
    using clock = std::chrono::steady_clock;
    Report rep;
    rep.suite = "cybe";
    auto t0 = clock::now();
    PresentationPtr cl = classical_presentation(build_uzp31(order));
    TensorSpace sp3 = TensorSpace::power(cl, 3);
    NCPolynomial r = classical_r_matrix(order);
    NCPolynomial r12 = retag_slots(r, sp3, [](unsigned s) { return s; });
    NCPolynomial r13 = retag_slots(r, sp3, [](unsigned s) { return s == 0 ? 0u : 2u; });
    NCPolynomial r23 = retag_slots(r, sp3, [](unsigned s) { return s + 1; });
    NCPolynomial sum = nc_commutator(r12, r13, sp3, opts);
    sum += nc_commutator(r12, r23, sp3, opts);
    sum += nc_commutator(r13, r23, sp3, opts);
    detail::record(rep, "cybe:classical", sum,
                   std::chrono::duration<double, std::milli>(clock::now() - t0).count());
    rep.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return rep;
}

} // namespace hopfv
