#pragma once

#include <set>

#include "hopfv/rep.hpp"

namespace hopfv {

// Quantum group of inhomogeneous spacetime transformations in light-cone
// coordinates: sixteen matrix entries L^mu_nu (rank 4*mu+nu) and four
// coordinates x+, x1, x2, x-.
namespace gen::qpoincare {
enum : unsigned { xp = 16, x1 = 17, x2 = 18, xm = 19 };
inline constexpr unsigned lam(unsigned mu, unsigned nu) { return 4 * mu + nu; }
inline constexpr int sgn(unsigned mu) { return mu == 0 ? 1 : -1; } // metric signature (+,-,-,-)
} // namespace gen::qpoincare

namespace detail {

// The frame column xi^mu expanded in the light-cone coordinates
// x+ = xi^0 + xi^3, x- = (xi^0 - xi^3)/2, x^i = xi^i.
inline const std::vector<std::vector<std::pair<unsigned, Rational>>>& xi_in_coordinates() {
    using namespace gen::qpoincare;
    static const std::vector<std::vector<std::pair<unsigned, Rational>>> t = {
        {{xp, Rational(1, 2)}, {xm, 1}},
        {{x1, 1}},
        {{x2, 1}},
        {{xp, Rational(1, 2)}, {xm, -1}},
    };
    return t;
}

// Inverse change of basis: each coordinate as a combination of xi^mu.
inline const std::vector<std::pair<unsigned, std::vector<std::pair<unsigned, Rational>>>>&
coordinates_in_xi() {
    using namespace gen::qpoincare;
    static const std::vector<std::pair<unsigned, std::vector<std::pair<unsigned, Rational>>>> t = {
        {xp, {{0u, 1}, {3u, 1}}},
        {x1, {{1u, 1}}},
        {x2, {{2u, 1}}},
        {xm, {{0u, Rational(1, 2)}, {3u, Rational(-1, 2)}}},
    };
    return t;
}

} // namespace detail

// Deformed commutation relations between the group coordinates, stored with
// the unreduced right sides. The two pseudo-orthogonality rewrite families
// (column contraction L^mu_0 L^rho_0 and row contraction L^0_nu L^0_sigma)
// are registered as pair rules; each application removes two index-0 letters
// and inserts none, so rewriting terminates, and the single overlapping key
// (0,0) joins: both routes reach -2 + sum of squared spatial entries.
inline PresentationPtr build_quantum_poincare(int order) {
    using namespace gen::qpoincare;
    const int N = order;
    auto P = std::make_shared<Presentation>();
    P->label = "qpoincare";
    P->grading = Grading::z;
    for (unsigned mu = 0; mu < 4; ++mu)
        for (unsigned nu = 0; nu < 4; ++nu)
            P->add_generator("L" + std::to_string(mu) + std::to_string(nu));
    for (const char* n : {"x+", "x1", "x2", "x-"}) P->add_generator(n);

    auto L = [](unsigned r) { return make_letter(0, r); };
    const ZSeries zz = ZSeries::monomial(1, 1, N);
    auto add_const = [&](NCPolynomial& p, const Rational& c) { p.add_term({}, ZSeries::constant(c, N) * zz); };
    auto add_one = [&](NCPolynomial& p, unsigned r, const Rational& c) {
        p.add_term({L(r)}, ZSeries::constant(c, N) * zz);
    };
    auto add_two = [&](NCPolynomial& p, unsigned a, unsigned b, const Rational& c) {
        if (a > b) std::swap(a, b); // frame entries commute, keep words sorted
        p.add_term({L(a), L(b)}, ZSeries::constant(c, N) * zz);
    };

    // [L^mu_nu, coordinate], one builder per coordinate. The constant term of
    // the x+ family is -z(d_mu0 - d_mu3)(d_nu0 - d_nu3): that value is forced
    // by the exchange equation (the derivation suite re-solves for it), and it
    // is the unique choice under which the relations satisfy the Jacobi
    // identity.
    auto frame_xp = [&](unsigned mu, unsigned nu) {
        NCPolynomial r;
        if (mu == 0) {
            add_one(r, lam(3, nu), -2);
            if (nu == 0) add_const(r, -1);
            if (nu == 3) add_const(r, 1);
        }
        if (mu == 3) {
            add_one(r, lam(0, nu), -2);
            if (nu == 0) add_const(r, 1);
            if (nu == 3) add_const(r, -1);
        }
        for (unsigned a : {0u, 3u})
            for (unsigned b : {0u, 3u}) add_two(r, lam(mu, a), lam(b, nu), 1);
        return r;
    };
    auto frame_xm = [&](unsigned mu, unsigned nu) {
        NCPolynomial r;
        if (mu == 0 || mu == 3) {
            if (nu == 0) add_const(r, Rational(-1, 2));
            if (nu == 3) add_const(r, Rational(1, 2));
        }
        for (unsigned a : {0u, 3u})
            for (unsigned b : {0u, 3u}) add_two(r, lam(mu, a), lam(b, nu), Rational(b == 0 ? 1 : -1, 2));
        return r;
    };
    auto frame_xi = [&](unsigned i, unsigned mu, unsigned nu) {
        const unsigned other = 3 - i; // 1 <-> 2
        NCPolynomial r;
        if (mu == other) add_one(r, lam(i, nu), 1);
        if (mu == i) {
            add_one(r, lam(0, nu), -1);
            add_one(r, lam(i, nu), 1);
            add_one(r, lam(3, nu), 1);
            if (nu == 0) add_const(r, 1);
            if (nu == 3) add_const(r, -1);
        }
        add_two(r, lam(i, nu), lam(mu, 0), 1);
        add_two(r, lam(i, nu), lam(mu, 3), 1);
        add_one(r, lam(i, nu), -1);
        return r;
    };
    for (unsigned mu = 0; mu < 4; ++mu)
        for (unsigned nu = 0; nu < 4; ++nu) {
            P->set_commutator(xp, lam(mu, nu), -frame_xp(mu, nu));
            P->set_commutator(xm, lam(mu, nu), -frame_xm(mu, nu));
            P->set_commutator(x1, lam(mu, nu), -frame_xi(1, mu, nu));
            P->set_commutator(x2, lam(mu, nu), -frame_xi(2, mu, nu));
        }
    {
        NCPolynomial c;
        c.add_term({L(x1)}, ZSeries::constant(2, N) * zz);
        P->set_commutator(x1, xp, c);
    }
    {
        NCPolynomial c;
        c.add_term({L(x2)}, ZSeries::constant(2, N) * zz);
        P->set_commutator(x2, xp, c);
    }
    {
        NCPolynomial c;
        c.add_term({L(xm)}, ZSeries::constant(2, N) * zz);
        P->set_commutator(xm, xp, c);
    }

    // Pseudo-orthogonality: L^mu_0 L^rho_0 -> eta^{mu rho} + sum_k L^mu_k L^rho_k
    // and its row-contracted transpose (key (0,0) appears once; the families
    // agree there after full reduction).
    for (unsigned mu = 0; mu < 4; ++mu)
        for (unsigned rho = mu; rho < 4; ++rho) {
            NCPolynomial rhs;
            if (mu == rho) rhs.add_term({}, ZSeries::constant(sgn(mu), N));
            for (unsigned k = 1; k < 4; ++k)
                rhs.add_term({L(lam(mu, k)), L(lam(rho, k))}, ZSeries::one(N));
            P->add_pair_rule(lam(mu, 0), lam(rho, 0), std::move(rhs));
        }
    for (unsigned nu = 0; nu < 4; ++nu)
        for (unsigned sig = nu; sig < 4; ++sig) {
            if (nu == 0 && sig == 0) continue;
            NCPolynomial rhs;
            if (nu == sig) rhs.add_term({}, ZSeries::constant(sgn(nu), N));
            for (unsigned m = 1; m < 4; ++m)
                rhs.add_term({L(lam(m, nu)), L(lam(m, sig))}, ZSeries::one(N));
            P->add_pair_rule(lam(0, nu), lam(0, sig), std::move(rhs));
        }

    P->enable_coproduct();
    P->enable_counit();
    P->enable_antipode();
    const ZSeries one = ZSeries::one(N);
    for (unsigned mu = 0; mu < 4; ++mu)
        for (unsigned nu = 0; nu < 4; ++nu) {
            NCPolynomial d;
            for (unsigned rho = 0; rho < 4; ++rho)
                d.add_term({make_letter(0, lam(mu, rho)), make_letter(1, lam(rho, nu))}, one);
            P->set_coproduct(lam(mu, nu), std::move(d));
            P->set_counit(lam(mu, nu), mu == nu ? one : ZSeries(N));
            NCPolynomial g;
            g.add_term({L(lam(nu, mu))}, ZSeries::constant(sgn(mu) * sgn(nu), N));
            P->set_antipode(lam(mu, nu), std::move(g));
        }
    const auto& xi = detail::xi_in_coordinates();
    for (const auto& [s, row] : detail::coordinates_in_xi()) {
        NCPolynomial d;
        d.add_term({make_letter(0, s)}, one);
        NCPolynomial g;
        for (const auto& [mu, m] : row)
            for (unsigned rho = 0; rho < 4; ++rho)
                for (const auto& [xl, c] : xi[rho]) {
                    d.add_term({make_letter(0, lam(mu, rho)), make_letter(1, xl)},
                               ZSeries::constant(m * c, N));
                    g.add_term({L(lam(rho, mu)), L(xl)},
                               ZSeries::constant(-m * c * sgn(mu) * sgn(rho), N));
                }
        P->set_coproduct(s, std::move(d));
        P->set_counit(s, ZSeries(N));
        P->set_antipode(s, std::move(g));
    }
    return P;
}

// Commutative shadow of the group: same twenty coordinates, empty commutator
// table. With rules the pseudo-orthogonality rewrites stay active, which is
// what the semiclassical residuals reduce against.
inline PresentationPtr build_classical_poincare(int order, bool with_rules) {
    using namespace gen::qpoincare;
    auto P = std::make_shared<Presentation>();
    P->label = with_rules ? "poincare" : "poincare-free";
    P->grading = Grading::z;
    for (unsigned mu = 0; mu < 4; ++mu)
        for (unsigned nu = 0; nu < 4; ++nu)
            P->add_generator("L" + std::to_string(mu) + std::to_string(nu));
    for (const char* n : {"x+", "x1", "x2", "x-"}) P->add_generator(n);
    if (!with_rules) return P;
    auto L = [](unsigned r) { return make_letter(0, r); };
    for (unsigned mu = 0; mu < 4; ++mu)
        for (unsigned rho = mu; rho < 4; ++rho) {
            NCPolynomial rhs;
            if (mu == rho) rhs.add_term({}, ZSeries::constant(sgn(mu), order));
            for (unsigned k = 1; k < 4; ++k)
                rhs.add_term({L(lam(mu, k)), L(lam(rho, k))}, ZSeries::one(order));
            P->add_pair_rule(lam(mu, 0), lam(rho, 0), std::move(rhs));
        }
    for (unsigned nu = 0; nu < 4; ++nu)
        for (unsigned sig = nu; sig < 4; ++sig) {
            if (nu == 0 && sig == 0) continue;
            NCPolynomial rhs;
            if (nu == sig) rhs.add_term({}, ZSeries::constant(sgn(nu), order));
            for (unsigned m = 1; m < 4; ++m)
                rhs.add_term({L(lam(m, nu)), L(lam(m, sig))}, ZSeries::one(order));
            P->add_pair_rule(lam(0, nu), lam(0, sig), std::move(rhs));
        }
    return P;
}

// The defining 5x5 coordinate matrix: unit first row, frame block L^mu_nu,
// first column xi^mu expanded in the light-cone coordinates.
inline PolyMatrix poincare_matrix(int order) {
    using namespace gen::qpoincare;
    PolyMatrix m(5, 5);
    m.at(0, 0) = NCPolynomial::one(order);
    for (unsigned mu = 0; mu < 4; ++mu)
        for (unsigned nu = 0; nu < 4; ++nu)
            m.at(1 + mu, 1 + nu) = NCPolynomial::generator(0, lam(mu, nu), order);
    const auto& xi = detail::xi_in_coordinates();
    for (unsigned mu = 0; mu < 4; ++mu)
        for (const auto& [xl, c] : xi[mu])
            m.at(1 + mu, 0) += Rational(c) * NCPolynomial::generator(0, xl, order);
    return m;
}

// Numeric image of the braiding element on the 25-dimensional square: the
// identity plus the full z-linear wedge. Every entry is a plain series, so
// the same matrix multiplies coordinate-valued matrices in any space.
inline PolyMatrix rep_r_wedge(int order, const ReduceOptions& opts = {}) {
    using namespace gen::uzp31;
    Rep5 D(order);
    TensorSpace sp = TensorSpace::plain(build_uzp31(order));
    auto wedge = [&](unsigned a, unsigned b) {
        return mat_sub(kron(D.of(a), D.of(b), sp, opts), kron(D.of(b), D.of(a), sp, opts));
    };
    PolyMatrix w = mat_add(mat_add(wedge(K3, Pp), wedge(E1, P1)), wedge(E2, P2));
    return mat_add(mat_identity(25, order), mat_scale(ZSeries::monomial(2, 1, order), w));
}

// Exchange relation on the coordinate matrix: R (P (x) P) = (P (x) P)~ R,
// where the twist orders the second slot's factors first. All 625 entries
// must reduce to zero against the deformed table plus the orthogonality
// rules.
inline Report check_frt_exchange(int order, const ReduceOptions& opts = {}) {
    using clock = std::chrono::steady_clock;
    Report rep;
    rep.suite = "frt-exchange";
    auto total0 = clock::now();
    PresentationPtr G = build_quantum_poincare(order);
    TensorSpace sp = TensorSpace::plain(G);
    PolyMatrix P = poincare_matrix(order);
    PolyMatrix R = rep_r_wedge(order, opts);
    PolyMatrix P1 = kron(P, mat_identity(5, order), sp, opts);
    PolyMatrix P2 = kron(mat_identity(5, order), P, sp, opts);
    auto t0 = clock::now();
    PolyMatrix lhs = mat_mul(mat_mul(R, P1, sp, opts), P2, sp, opts);
    PolyMatrix rhs = mat_mul(mat_mul(P2, P1, sp, opts), R, sp, opts);
    detail::record_matrix(rep, "frt:exchange_relation", mat_sub(lhs, rhs),
                          std::chrono::duration<double, std::milli>(clock::now() - t0).count(),
                          "625 entries");
    rep.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - total0).count();
    return rep;
}

namespace detail {

// Free quadratic polynomials: plain word/series maps with concatenation
// products and no rewriting, used to re-derive the commutation relations
// from the exchange equation instead of assuming them.
using FreePoly = std::map<Word, ZSeries>;

inline void fp_add(FreePoly& p, Word w, const ZSeries& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = p.try_emplace(std::move(w), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

// Normalizes a free quadratic against the solved commutators and the
// orthogonality rewrites, leaving unsolved disordered pairs untouched.
inline FreePoly fp_reduce(const FreePoly& in,
                          const std::map<std::pair<unsigned, unsigned>, FreePoly>& known) {
    using namespace gen::qpoincare;
    FreePoly out;
    std::vector<std::pair<Word, ZSeries>> work(in.begin(), in.end());
    auto L = [](unsigned r) { return make_letter(0, r); };
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        if (c.is_zero()) continue;
        if (w.size() == 2) {
            unsigned a = letter_rank(w[0]), b = letter_rank(w[1]);
            if (a > b) {
                auto it = known.find({a, b});
                if (it != known.end()) {
                    work.push_back({Word{L(b), L(a)}, c});
                    for (const auto& [kw, kc] : it->second) work.push_back({kw, c * kc});
                    continue;
                }
            } else if (a % 4 == 0 && b % 4 == 0 && b < 16) {
                unsigned mu = a / 4, rho = b / 4;
                if (mu == rho) work.push_back({Word{}, ZSeries::constant(sgn(mu), c.order()) * c});
                for (unsigned k = 1; k < 4; ++k)
                    work.push_back({Word{L(lam(mu, k)), L(lam(rho, k))}, c});
                continue;
            } else if (a < 4 && b < 4 && !(a == 0 && b == 0)) {
                if (a == b) work.push_back({Word{}, ZSeries::constant(sgn(a), c.order()) * c});
                for (unsigned m = 1; m < 4; ++m)
                    work.push_back({Word{L(lam(m, a)), L(lam(m, b))}, c});
                continue;
            }
        }
        fp_add(out, std::move(w), c);
    }
    return out;
}

// ---- exact arithmetic over the contraction ideal ----------------------------
//
// Pair-rule rewriting orients each metric contraction one way, so sums over
// the contracted index (for example sum_k L^mu_k L^rho_k) can survive
// word-level reduction even though they belong to the relation ideal. The two
// helpers below close that gap exactly:
//
//  * ContractionSpan row-reduces the twenty contraction quadrics and pushes
//    any free quadratic onto a canonical representative modulo their span.
//  * OrthogonalityOracle decides ideal membership in any degree by
//    specializing the matrix block to a generic metric-preserving matrix
//    over a rational function field in six parameters (Cayley transform,
//    stored as a polynomial numerator matrix plus its determinant, one
//    specialization per determinant sign). The contraction quadrics cut out
//    a smooth scheme, so their ideal is radical and generic vanishing is
//    equivalent to membership. Tensor slots get disjoint parameter blocks
//    (the vanishing ideal of a product variety splits slotwise), so the test
//    also covers residuals of coproduct-level checks up to rank three.

using Mono6 = std::array<std::uint8_t, 18>; // three slots, six parameters each
using Poly6 = std::map<Mono6, Rational>;

inline void p6_add(Poly6& p, const Mono6& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = p.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

inline Poly6 p6_mul(const Poly6& a, const Poly6& b) {
    Poly6 out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Mono6 m{};
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
            p6_add(out, m, ca * cb);
        }
    return out;
}

inline Poly6 p6_det3(const std::array<Poly6, 9>& m) {
    Poly6 out;
    auto acc = [&](const Poly6& a, const Poly6& b, const Poly6& c, int sign) {
        for (const auto& [mm, cc] : p6_mul(p6_mul(a, b), c)) p6_add(out, mm, sign * cc);
    };
    acc(m[0], m[4], m[8], 1);
    acc(m[0], m[5], m[7], -1);
    acc(m[1], m[3], m[8], -1);
    acc(m[1], m[5], m[6], 1);
    acc(m[2], m[3], m[7], 1);
    acc(m[2], m[4], m[6], -1);
    return out;
}

inline std::array<Poly6, 9> p6_minor(const std::array<Poly6, 16>& m, int ri, int cj) {
    std::array<Poly6, 9> out;
    int k = 0;
    for (int i = 0; i < 4; ++i) {
        if (i == ri) continue;
        for (int j = 0; j < 4; ++j) {
            if (j == cj) continue;
            out[k++] = m[i * 4 + j];
        }
    }
    return out;
}

class OrthogonalityOracle {
public:
    OrthogonalityOracle() {
        std::array<Poly6, 16> M, P;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Poly6 x; // entry (i,j) of eta*S with S generic antisymmetric
                if (i != j) {
                    static const int slot[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
                    Mono6 m{};
                    m[slot[i][j]] = 1;
                    x[m] = Rational(i < j ? 1 : -1) * (i == 0 ? 1 : -1);
                }
                Poly6 diag;
                if (i == j) diag[Mono6{}] = 1;
                M[i * 4 + j] = diag; // I - eta S
                for (const auto& [mm, cc] : x) p6_add(M[i * 4 + j], mm, -cc);
                P[i * 4 + j] = diag; // I + eta S
                for (const auto& [mm, cc] : x) p6_add(P[i * 4 + j], mm, cc);
            }
        std::array<Poly6, 16> adj;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Poly6 d = p6_det3(p6_minor(M, j, i));
                if ((i + j) % 2) {
                    Poly6 neg;
                    for (const auto& [mm, cc] : d) neg[mm] = -cc;
                    d = std::move(neg);
                }
                adj[i * 4 + j] = std::move(d);
            }
        for (int j = 0; j < 4; ++j) {
            Poly6 d = p6_mul(M[j], p6_det3(p6_minor(M, 0, j)));
            for (const auto& [mm, cc] : d) p6_add(det_[0], mm, (j % 2 ? -1 : 1) * cc);
        }
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Poly6 v;
                for (int k = 0; k < 4; ++k) {
                    for (const auto& [mm, cc] : p6_mul(adj[i * 4 + k], P[k * 4 + j]))
                        p6_add(v, mm, cc);
                }
                for (int s = 0; s < 3; ++s) lam_[s][0][i * 4 + j] = shifted(v, s);
                if (j == 3)
                    for (auto& [mm, cc] : v) cc = -cc; // reflect one column: other det sign
                for (int s = 0; s < 3; ++s) lam_[s][1][i * 4 + j] = shifted(v, s);
            }
        for (int s = 1; s < 3; ++s) det_[s] = shifted(det_[0], s);
    }

    bool vanishes(const NCPolynomial& p) const { return vanishes_terms(p.terms()); }
    bool vanishes(const FreePoly& p) const { return vanishes_terms(p); }

private:
    std::array<Poly6, 16> lam_[3][2]; // [slot][determinant sign component]
    Poly6 det_[3];

    static Poly6 shifted(const Poly6& p, int slot) {
        if (slot == 0) return p;
        Poly6 out;
        for (const auto& [m, c] : p) {
            Mono6 mm{};
            for (int v = 0; v < 6; ++v) mm[6 * slot + v] = m[v];
            out[mm] = c;
        }
        return out;
    }

    template <class Terms> bool vanishes_terms(const Terms& terms) const {
        int nslots = 1;
        for (const auto& [w, c] : terms)
            for (auto l : w) nslots = std::max(nslots, static_cast<int>(letter_slot(l)) + 1);
        if (nslots > 3) return false; // only ranks up to three are parametrized
        for (int combo = 0; combo < (1 << nslots); ++combo)
            if (!vanishes_component(terms, combo)) return false;
        return true;
    }

    template <class Terms> bool vanishes_component(const Terms& terms, int combo) const {
        // Split each sorted word into its matrix monomial and coordinate
        // tail, then scale every matrix monomial in a tail group to the
        // group's top degree with determinant powers (clearing the common
        // denominator of the rational parametrization, per slot).
        std::map<Word, std::array<std::size_t, 3>> top;
        for (const auto& [w, c] : terms) {
            if (c.is_zero()) continue;
            Word tail;
            std::array<std::size_t, 3> deg{};
            for (auto l : w)
                if (letter_rank(l) < 16)
                    ++deg[letter_slot(l)];
                else
                    tail.push_back(l);
            auto [it, fresh] = top.try_emplace(tail, deg);
            if (!fresh)
                for (int s = 0; s < 3; ++s) it->second[s] = std::max(it->second[s], deg[s]);
        }
        std::map<Word, std::map<Mono6, ZSeries>> acc;
        std::map<std::vector<Letter>, Poly6> cache;
        for (const auto& [w, c] : terms) {
            if (c.is_zero()) continue;
            Word tail;
            std::vector<Letter> mono; // matrix letters keep their slot tags
            std::array<std::size_t, 3> deg{};
            for (auto l : w)
                if (letter_rank(l) < 16) {
                    mono.push_back(l);
                    ++deg[letter_slot(l)];
                } else {
                    tail.push_back(l);
                }
            auto [mit, fresh] = cache.try_emplace(mono);
            if (fresh) {
                Poly6 v;
                v[Mono6{}] = 1;
                for (auto l : mono) {
                    unsigned s = letter_slot(l);
                    v = p6_mul(v, lam_[s][(combo >> s) & 1][letter_rank(l)]);
                }
                mit->second = std::move(v);
            }
            Poly6 v = mit->second;
            const auto& want = top[tail];
            for (int s = 0; s < 3; ++s)
                for (std::size_t k = deg[s]; k < want[s]; ++k) v = p6_mul(v, det_[s]);
            auto& group = acc[tail];
            for (const auto& [m6, r] : v) {
                auto [jt, fresh2] = group.try_emplace(m6, r * c);
                if (!fresh2) jt->second += r * c;
            }
        }
        for (const auto& [tail, group] : acc)
            for (const auto& [m6, s] : group)
                if (!s.is_zero()) return false;
        return true;
    }
};

inline const OrthogonalityOracle& orthogonality_oracle() {
    static const OrthogonalityOracle oracle;
    return oracle;
}

class ContractionSpan {
public:
    ContractionSpan() {
        using namespace gen::qpoincare;
        std::vector<std::map<int, Rational>> gens;
        for (unsigned mu = 0; mu < 4; ++mu)
            for (unsigned rho = mu; rho < 4; ++rho) {
                std::map<int, Rational> f1, f2;
                f1[qidx(lam(mu, 0), lam(rho, 0))] += 1;
                f2[qidx(mu, rho)] += 1;
                for (unsigned k = 1; k < 4; ++k) {
                    f1[qidx(lam(mu, k), lam(rho, k))] -= 1;
                    f2[qidx(lam(k, mu), lam(k, rho))] -= 1;
                }
                if (mu == rho) {
                    f1[kConst] -= sgn(mu);
                    f2[kConst] -= sgn(mu);
                }
                gens.push_back(std::move(f1));
                gens.push_back(std::move(f2));
            }
        for (auto& g : gens) {
            reduce_row(g);
            if (g.empty()) continue;
            int piv = g.begin()->first;
            Rational inv = 1 / g.begin()->second;
            for (auto& [i, c] : g) c *= inv;
            for (auto& [p, row] : rows_) {
                auto it = row.find(piv);
                if (it == row.end()) continue;
                Rational f = it->second;
                for (const auto& [i, c] : g) {
                    row[i] -= f * c;
                    if (row[i] == 0) row.erase(i);
                }
            }
            rows_[piv] = std::move(g);
        }
    }

    // Canonical representative modulo the quadric span. Words must be
    // sorted; only two-letter pure matrix words are rewritten.
    FreePoly reduce(const FreePoly& in) const {
        FreePoly out;
        for (const auto& [w, c] : in) {
            if (w.size() == 2 && letter_rank(w[0]) < 16 && letter_rank(w[1]) < 16) {
                int q = qidx(letter_rank(w[0]), letter_rank(w[1]));
                auto it = rows_.find(q);
                if (it != rows_.end()) {
                    for (const auto& [i, rc] : it->second) {
                        if (i == q) continue;
                        fp_add(out, word_of(i), -rc * c);
                    }
                    continue;
                }
            }
            fp_add(out, w, c);
        }
        return out;
    }

private:
    static constexpr int kConst = 136;
    std::map<int, std::map<int, Rational>> rows_;

    static int qidx(unsigned a, unsigned b) {
        if (a > b) std::swap(a, b);
        return static_cast<int>(a * 16 + b - a * (a + 1) / 2);
    }
    static Word word_of(int idx) {
        if (idx == kConst) return Word{};
        for (unsigned a = 0; a < 16; ++a)
            for (unsigned b = a; b < 16; ++b)
                if (qidx(a, b) == idx) return Word{make_letter(0, a), make_letter(0, b)};
        return Word{};
    }
    void reduce_row(std::map<int, Rational>& g) const {
        for (const auto& [piv, row] : rows_) {
            auto it = g.find(piv);
            if (it == g.end()) continue;
            Rational f = it->second;
            for (const auto& [i, c] : row) {
                g[i] -= f * c;
                if (g[i] == 0) g.erase(i);
            }
        }
    }
};

inline const ContractionSpan& contraction_span() {
    static const ContractionSpan span;
    return span;
}

} // namespace detail

namespace detail {

// Linear system over the commutator unknowns: each exchange entry, reduced
// against the orthogonality rewrites, reads sum_u A_u chi_u = b with unit
// leading coefficients coming from the identity part of the braiding.
struct ExchangeSolution {
    std::map<std::pair<unsigned, unsigned>, FreePoly> chi;
    std::size_t inconsistent = 0; // equations whose known side fails to vanish
};

inline ExchangeSolution solve_exchange_system(const PolyMatrix& P, const PolyMatrix& R, int N) {
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
                            auto [at, anew] = q.A.try_emplace({hi, lo}, c);
                            if (!anew) at->second += c;
                            // move the reordered word to the known side
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

    // Forward elimination with unit pivots (the identity part of the
    // braiding guarantees them), deferring any equation that momentarily
    // lacks one.
    std::vector<std::pair<std::pair<unsigned, unsigned>, LinEq>> pivots;
    ExchangeSolution out;
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
                if (!e.b.empty() && !orthogonality_oracle().vanishes(e.b)) ++out.inconsistent;
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
            pivots.push_back({pick->first, std::move(e)});
            grew = true;
        }
        eqs = std::move(deferred);
        deferred.clear();
        if (eqs.empty()) break;
    }
    for (auto& e : eqs) {
        eliminate(e);
        if (!e.A.empty() || (!e.b.empty() && !orthogonality_oracle().vanishes(e.b)))
            ++out.inconsistent;
    }

    // Back substitution in reverse pivot order.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const auto& [u, e] = *it;
        FreePoly val = e.b;
        bool blocked = false;
        for (const auto& [v, c] : e.A) {
            if (v == u) continue;
            auto jt = out.chi.find(v);
            if (jt == out.chi.end()) {
                blocked = true;
                break;
            }
            for (const auto& [w, vc] : jt->second) fp_add(val, w, -(c * vc));
        }
        if (blocked) {
            ++out.inconsistent;
            continue;
        }
        ZSeries inv = series_inverse(e.A.at(u));
        FreePoly scaled;
        for (const auto& [w, c] : val) fp_add(scaled, w, inv * c);
        out.chi[u] = contraction_span().reduce(scaled);
    }
    return out;
}

} // namespace detail

// Re-derivation of the commutation relations from the exchange equation over
// the free coordinate algebra: the 625 entries form a linear system in the
// unknown commutators (every entry is a combination of words of length at
// most two), which is solved outright. The derived set is then compared with
// the stored table modulo the orthogonality rewrites (both sides reduced to
// the same normal form; this is the only ordering freedom in the
// presentation).
inline Report derive_frt_relations(int order, const ReduceOptions& opts = {}) {
    using namespace gen::qpoincare;
    using clock = std::chrono::steady_clock;
    Report rep;
    rep.suite = "frt-derive";
    auto total0 = clock::now();
    const int N = order;
    PresentationPtr G = build_quantum_poincare(N);
    TensorSpace sp = TensorSpace::plain(G);
    auto t0 = clock::now();
    detail::ExchangeSolution sol =
        detail::solve_exchange_system(poincare_matrix(N), rep_r_wedge(N, opts), N);
    double solve_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();

    std::size_t unsolved = 0;
    for (unsigned q = 0; q < G->size(); ++q)
        for (unsigned p = 0; p < q; ++p)
            if (!sol.chi.count({q, p})) ++unsolved;
    {
        CheckResult c;
        c.id = "frt:derive:coverage";
        c.pass = unsolved == 0;
        c.residual_terms = unsolved;
        c.wall_ms = solve_ms;
        c.note = std::to_string(sol.chi.size()) + " of 190 pairs solved";
        rep.add(std::move(c));
    }
    {
        CheckResult c;
        c.id = "frt:derive:consistency";
        c.pass = sol.inconsistent == 0;
        c.residual_terms = sol.inconsistent;
        c.note = "exchange equations left over after elimination";
        rep.add(std::move(c));
    }

    // The solver returns fully contracted canonical forms while the stored
    // table keeps the published shape, so the comparison is made modulo the
    // orthogonality ideal.
    auto derived_vs_stored = [&](unsigned q, unsigned p) {
        NCPolynomial diff;
        auto it = sol.chi.find({q, p});
        if (it != sol.chi.end())
            for (const auto& [w, c] : it->second) diff.add_term(w, c);
        if (const NCPolynomial* t = G->commutator(q, p)) diff -= *t;
        return normal_order(diff, sp, opts);
    };
    auto matches = [&](unsigned q, unsigned p) {
        NCPolynomial d = derived_vs_stored(q, p);
        return d.is_zero() || detail::orthogonality_oracle().vanishes(d);
    };
    for (unsigned q = 16; q < 20; ++q)
        for (unsigned p = 16; p < q; ++p) {
            NCPolynomial d = derived_vs_stored(q, p);
            bool ideal = !d.is_zero() && detail::orthogonality_oracle().vanishes(d);
            detail::record(rep, std::string("frt:derive:") + G->name(q) + "," + G->name(p), d,
                           0.0, ideal ? "vanishes modulo the relation ideal" : "", ideal);
        }
    {
        auto t0 = clock::now();
        std::size_t bad = 0;
        for (unsigned q = 1; q < 16; ++q)
            for (unsigned p = 0; p < q; ++p)
                if (!matches(q, p)) ++bad;
        CheckResult c;
        c.id = "frt:derive:frame_frame";
        c.pass = bad == 0;
        c.residual_terms = bad;
        c.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        c.note = "120 pairs";
        rep.add(std::move(c));
    }
    {
        auto t0 = clock::now();
        std::size_t bad = 0;
        for (unsigned q = 16; q < 20; ++q)
            for (unsigned p = 0; p < 16; ++p)
                if (!matches(q, p)) ++bad;
        CheckResult c;
        c.id = "frt:derive:frame_coordinate";
        c.pass = bad == 0;
        c.residual_terms = bad;
        c.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        c.note = "64 pairs";
        rep.add(std::move(c));
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - total0).count();
    return rep;
}

// Hopf structure of the group: generic axioms plus the matrix-level
// identities (entrywise counit is the unit matrix, entrywise antipode is a
// two-sided matrix inverse, the matrix coproduct (P (*) P)_ij = sum_k
// P_ik (x) P_kj matches the stored tables) and compatibility of the
// orthogonality rewrites with all three structure maps.
inline Report check_quantum_poincare_hopf(int order, const ReduceOptions& opts = {}) {
    using clock = std::chrono::steady_clock;
    Report rep;
    rep.suite = "frt-hopf";
    auto total0 = clock::now();
    const int N = order;
    PresentationPtr G = build_quantum_poincare(N);
    TensorSpace sp1 = TensorSpace::plain(G);
    TensorSpace sp2 = TensorSpace::power(G, 2);
    PolyMatrix P = poincare_matrix(N);

    auto fold = [&](const Report& sub, const std::string& id) {
        CheckResult c;
        c.id = id;
        c.pass = sub.failed_count() == 0;
        c.residual_terms = sub.failed_count();
        c.wall_ms = sub.wall_ms;
        c.note = std::to_string(sub.checks.size()) + " checks";
        rep.add(std::move(c));
        for (const auto& sc : sub.checks)
            if (!sc.pass) rep.add(sc);
    };
    // Rewrite rules orient the orthogonality quadrics one way, so residuals
    // may normalize to nonzero ideal members; the oracle closes that gap.
    auto in_ideal = [](const NCPolynomial& p) { return detail::orthogonality_oracle().vanishes(p); };
    fold(check_jacobi(G, N, opts, in_ideal), "frt:jacobi");
    {
        HopfCheckConfig cfg;
        cfg.order = N;
        cfg.reduce = opts;
        cfg.residual_vanishes = in_ideal;
        fold(check_hopf_axioms(G, cfg), "frt:hopf_axioms");
    }

    {
        auto t0 = clock::now();
        PolyMatrix eps(5, 5);
        for (unsigned i = 0; i < 5; ++i)
            for (unsigned j = 0; j < 5; ++j)
                eps.at(i, j) = NCPolynomial::scalar(poly_counit(P.at(i, j), G, N));
        detail::record_matrix(rep, "frt:counit_matrix", mat_sub(eps, mat_identity(5, N)),
                              std::chrono::duration<double, std::milli>(clock::now() - t0).count());
    }
    {
        auto t0 = clock::now();
        PolyMatrix inv(5, 5);
        for (unsigned i = 0; i < 5; ++i)
            for (unsigned j = 0; j < 5; ++j)
                inv.at(i, j) = antipode_on_slot(P.at(i, j), sp1, 0, N, opts);
        PolyMatrix id5 = mat_identity(5, N);
        detail::record_matrix(rep, "frt:antipode_matrix:left",
                              mat_sub(mat_mul(inv, P, sp1, opts), id5),
                              std::chrono::duration<double, std::milli>(clock::now() - t0).count(),
                              "", in_ideal);
        detail::record_matrix(rep, "frt:antipode_matrix:right",
                              mat_sub(mat_mul(P, inv, sp1, opts), id5), 0.0, "", in_ideal);
    }
    {
        auto t0 = clock::now();
        PolyMatrix co(5, 5), tabled(5, 5);
        for (unsigned i = 0; i < 5; ++i)
            for (unsigned j = 0; j < 5; ++j) {
                NCPolynomial s;
                for (unsigned k = 0; k < 5; ++k) {
                    if (P.at(i, k).is_zero() || P.at(k, j).is_zero()) continue;
                    s += tensor_product(P.at(i, k), sp1, P.at(k, j), sp2);
                }
                co.at(i, j) = normal_order(s, sp2, opts);
                tabled.at(i, j) = coproduct(P.at(i, j), G, N, opts);
            }
        detail::record_matrix(rep, "frt:coproduct_matrix", mat_sub(co, tabled),
                              std::chrono::duration<double, std::milli>(clock::now() - t0).count(),
                              "", in_ideal);
    }
    {
        // The rewrite families must descend to the coalgebra: structure maps
        // applied to both sides of each rule agree.
        auto t0 = clock::now();
        NCPolynomial dres, gres;
        ZSeries eres(N);
        for (const auto& r : G->pair_rules()) {
            NCPolynomial lhs = NCPolynomial::word_term({make_letter(0, r.a), make_letter(0, r.b)},
                                                       ZSeries::one(N));
            dres += coproduct(lhs, G, N, opts) - coproduct(r.rhs, G, N, opts);
            eres += poly_counit(lhs, G, N) - poly_counit(r.rhs, G, N);
            gres += antipode_on_slot(lhs, sp1, 0, N, opts) -
                    antipode_on_slot(r.rhs, sp1, 0, N, opts);
        }
        double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        bool di = !dres.is_zero() && in_ideal(dres);
        bool gi = !gres.is_zero() && in_ideal(gres);
        detail::record(rep, "frt:relation_coproduct", dres, ms,
                       di ? "vanishes modulo the relation ideal" : "19 rewrite rules", di);
        detail::record(rep, "frt:relation_counit", NCPolynomial::scalar(eres), 0.0);
        detail::record(rep, "frt:relation_antipode", gres, 0.0,
                       gi ? "vanishes modulo the relation ideal" : "", gi);
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - total0).count();
    return rep;
}

// Semiclassical limit: with commuting coordinates, the bracket read off from
// [r, P (x) P] must reproduce the z-linear part of every deformed commutator
// up to one global scale, and the frame-frame brackets must vanish modulo
// the orthogonality rewrites. The quadratic right sides only involve
// mutually commuting coordinates, so no symmetrization ambiguity arises in
// the comparison.
inline Report check_poisson_limit(int order, const ReduceOptions& opts = {}) {
    using namespace gen::qpoincare;
    using clock = std::chrono::steady_clock;
    Report rep;
    rep.suite = "frt-poisson";
    auto total0 = clock::now();
    const int N = order;
    PresentationPtr G = build_quantum_poincare(N);
    PresentationPtr Cfree = build_classical_poincare(N, false);
    PresentationPtr Crules = build_classical_poincare(N, true);
    TensorSpace spf = TensorSpace::plain(Cfree);
    TensorSpace spr = TensorSpace::plain(Crules);

    auto t0 = clock::now();
    PolyMatrix P = poincare_matrix(N);
    PolyMatrix R = rep_r_wedge(N, opts);
    PolyMatrix r(25, 25); // z-linear part of the braiding, as plain constants
    for (unsigned i = 0; i < 25; ++i)
        for (unsigned j = 0; j < 25; ++j)
            r.at(i, j) = poly_z_coefficient(R.at(i, j), 1, N);
    PolyMatrix PP = kron(P, P, spf, opts);
    PolyMatrix B = mat_sub(mat_mul(r, PP, spf, opts), mat_mul(PP, r, spf, opts));
    double bracket_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();

    {
        NCPolynomial res;
        for (unsigned i = 0; i < 5; ++i)
            for (unsigned k = 0; k < 5; ++k)
                for (unsigned j = 0; j < 5; ++j)
                    for (unsigned l = 0; l < 5; ++l)
                        res += B.at(i * 5 + k, j * 5 + l) + B.at(k * 5 + i, l * 5 + j);
        detail::record(rep, "poisson:antisymmetry", normal_order(res, spf, opts), bracket_ms);
    }

    // Entry positions of each coordinate inside the defining matrix.
    std::map<unsigned, std::vector<std::tuple<unsigned, unsigned, Rational>>> spots;
    for (unsigned mu = 0; mu < 4; ++mu)
        for (unsigned nu = 0; nu < 4; ++nu) spots[lam(mu, nu)] = {{1 + mu, 1 + nu, 1}};
    spots[xp] = {{1, 0, 1}, {4, 0, 1}};
    spots[x1] = {{2, 0, 1}};
    spots[x2] = {{3, 0, 1}};
    spots[xm] = {{1, 0, Rational(1, 2)}, {4, 0, Rational(-1, 2)}};
    auto bracket = [&](unsigned g, unsigned h) {
        NCPolynomial out;
        for (const auto& [i, j, cg] : spots[g])
            for (const auto& [k, l, ch] : spots[h])
                out += (cg * ch) * B.at(i * 5 + k, j * 5 + l);
        return normal_order(out, spr, opts);
    };
    auto expected = [&](unsigned q, unsigned p) {
        const NCPolynomial* t = G->commutator(q, p);
        return t ? normal_order(poly_z_coefficient(*t, 1, N), spr, opts) : NCPolynomial();
    };

    // One global scale, fitted on the first pair where both sides are
    // nonzero and checked everywhere else.
    Rational kappa = 0;
    bool fitted = false;
    for (unsigned q = 0; q < 20 && !fitted; ++q)
        for (unsigned p = 0; p < q && !fitted; ++p) {
            NCPolynomial want = expected(q, p);
            if (want.is_zero()) continue;
            NCPolynomial got = bracket(q, p);
            const auto& [w, c] = *want.terms().begin();
            auto it = got.terms().find(w);
            if (it == got.terms().end()) continue;
            kappa = it->second[0] / c[0]; // both sides are constant coefficients
            fitted = true;
        }
    {
        CheckResult c;
        c.id = "poisson:scale_constant";
        c.pass = fitted && kappa != 0;
        c.note = "bracket = " + (fitted ? kappa.str() : std::string("?")) +
                 " * (z-linear commutator coefficient)";
        rep.add(std::move(c));
    }

    auto pair_residual = [&](unsigned q, unsigned p) {
        NCPolynomial diff = bracket(q, p) - kappa * expected(q, p);
        return normal_order(diff, spr, opts);
    };
    for (unsigned q = 16; q < 20; ++q)
        for (unsigned p = 16; p < q; ++p)
            detail::record(rep, std::string("poisson:") + G->name(q) + "," + G->name(p),
                           pair_residual(q, p), 0.0);
    {
        auto tb = clock::now();
        std::size_t bad = 0;
        for (unsigned q = 1; q < 16; ++q)
            for (unsigned p = 0; p < q; ++p)
                if (!pair_residual(q, p).is_zero()) ++bad;
        CheckResult c;
        c.id = "poisson:frame_frame";
        c.pass = bad == 0;
        c.residual_terms = bad;
        c.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - tb).count();
        c.note = "120 pairs, brackets vanish modulo orthogonality";
        rep.add(std::move(c));
    }
    {
        std::size_t bad = 0;
        for (unsigned q = 16; q < 20; ++q)
            for (unsigned p = 0; p < 16; ++p)
                if (!pair_residual(q, p).is_zero()) ++bad;
        CheckResult c;
        c.id = "poisson:frame_coordinate";
        c.pass = bad == 0;
        c.residual_terms = bad;
        c.note = "64 pairs";
        rep.add(std::move(c));
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - total0).count();
    return rep;
}

} // namespace hopfv
