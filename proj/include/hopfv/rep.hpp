#pragma once

#include "hopfv/rmatrix.hpp"

namespace hopfv {

// Dense matrix with noncommutative polynomial entries. Products keep the
// entry order (AB)_ik = sum_j A_ij B_jk, so one type serves numeric matrices
// (scalar entries), coordinate matrices, and their Kronecker squares.
struct PolyMatrix {
    unsigned rows = 0, cols = 0;
    std::vector<NCPolynomial> e;

    PolyMatrix() = default;
    PolyMatrix(unsigned r, unsigned c) : rows(r), cols(c), e(r * c) {}

    NCPolynomial& at(unsigned i, unsigned j) { return e[i * cols + j]; }
    const NCPolynomial& at(unsigned i, unsigned j) const { return e[i * cols + j]; }

    bool is_zero() const {
        for (const auto& p : e)
            if (!p.is_zero()) return false;
        return true;
    }
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.e == b.e;
    }
};

inline PolyMatrix mat_identity(unsigned n, int order) {
    PolyMatrix m(n, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = NCPolynomial::one(order);
    return m;
}

inline PolyMatrix mat_add(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix m = a;
    for (std::size_t k = 0; k < m.e.size(); ++k) m.e[k] += b.e[k];
    return m;
}

inline PolyMatrix mat_sub(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix m = a;
    for (std::size_t k = 0; k < m.e.size(); ++k) m.e[k] -= b.e[k];
    return m;
}

inline PolyMatrix mat_scale(const ZSeries& c, const PolyMatrix& a) {
    PolyMatrix m = a;
    for (auto& p : m.e) p = c * p;
    return m;
}

inline PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b, const TensorSpace& sp,
                          const ReduceOptions& opts = {}) {
    if (a.cols != b.rows) fail(errc::rank_mismatch, "matrix shape mismatch");
    PolyMatrix m(a.rows, b.cols);
    for (unsigned i = 0; i < a.rows; ++i)
        for (unsigned j = 0; j < a.cols; ++j) {
            const NCPolynomial& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (unsigned k = 0; k < b.cols; ++k) {
                if (b.at(j, k).is_zero()) continue;
                m.at(i, k) += nc_multiply(aij, b.at(j, k), sp, opts);
            }
        }
    return m;
}

// Kronecker product with ordered entry products A_ij B_kl.
inline PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b, const TensorSpace& sp,
                       const ReduceOptions& opts = {}) {
    PolyMatrix m(a.rows * b.rows, a.cols * b.cols);
    for (unsigned i = 0; i < a.rows; ++i)
        for (unsigned j = 0; j < a.cols; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (unsigned k = 0; k < b.rows; ++k)
                for (unsigned l = 0; l < b.cols; ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    m.at(i * b.rows + k, j * b.cols + l) = nc_multiply(a.at(i, j), b.at(k, l), sp, opts);
                }
        }
    return m;
}

inline PolyMatrix mat_commutator(const PolyMatrix& a, const PolyMatrix& b, const TensorSpace& sp,
                                 const ReduceOptions& opts = {}) {
    return mat_sub(mat_mul(a, b, sp, opts), mat_mul(b, a, sp, opts));
}

// exp(A) summed until a power vanishes; only sensible for nilpotent input.
inline PolyMatrix mat_exp(const PolyMatrix& a, const TensorSpace& sp, int order,
                          const ReduceOptions& opts = {}, int max_power = 64) {
    PolyMatrix sum = mat_identity(a.rows, order);
    PolyMatrix pw = mat_identity(a.rows, order);
    Rational fact = 1;
    for (int k = 1; k <= max_power; ++k) {
        pw = mat_mul(pw, a, sp, opts);
        if (pw.is_zero()) return sum;
        fact *= k;
        sum = mat_add(sum, mat_scale(ZSeries::constant(Rational(1) / fact, order), pw));
    }
    fail(errc::non_terminating, "matrix exponential did not terminate");
    return sum;
}

namespace detail {

inline void record_matrix(Report& rep, const std::string& id, const PolyMatrix& residual,
                          double ms, const std::string& note = "",
                          const std::function<bool(const NCPolynomial&)>& residual_vanishes = {}) {
    CheckResult r;
    r.id = id;
    std::size_t bad = 0;
    int zmax = -1;
    for (const auto& p : residual.e)
        if (!p.is_zero() && !(residual_vanishes && residual_vanishes(p))) {
            ++bad;
            zmax = std::max(zmax, p.max_z_order());
        }
    r.pass = bad == 0;
    r.residual_terms = bad;
    r.residual_order = zmax;
    r.wall_ms = ms;
    r.note = note;
    rep.add(std::move(r));
}

} // namespace detail

// The 5x5 representation of the ten generators, exact over the rationals.
// Entries are scalar polynomials so the same matrices combine freely with
// coordinate-valued matrices.
class Rep5 {
public:
    explicit Rep5(int order) : order_(order), d_(gen::uzp31::J3 + 1, PolyMatrix(5, 5)) {
        using namespace gen::uzp31;
        auto put = [&](unsigned g, unsigned i, unsigned j, const Rational& v) {
            d_[g].at(i, j) += NCPolynomial::scalar(ZSeries::constant(v, order_));
        };
        const Rational h(1, 2);
        put(Pp, 1, 0, h), put(Pp, 4, 0, h);
        put(P1, 2, 0, 1);
        put(P2, 3, 0, 1);
        put(K3, 1, 4, 1), put(K3, 4, 1, 1);
        put(E1, 1, 2, h), put(E1, 2, 1, h), put(E1, 2, 4, -h), put(E1, 4, 2, h);
        put(E2, 1, 3, h), put(E2, 3, 1, h), put(E2, 3, 4, -h), put(E2, 4, 3, h);
        put(Pm, 1, 0, 1), put(Pm, 4, 0, -1);
        put(F1, 1, 2, 1), put(F1, 2, 1, 1), put(F1, 2, 4, 1), put(F1, 4, 2, -1);
        put(F2, 1, 3, 1), put(F2, 3, 1, 1), put(F2, 3, 4, 1), put(F2, 4, 3, -1);
        put(J3, 2, 3, 1), put(J3, 3, 2, -1);
    }

    int order() const { return order_; }
    const PolyMatrix& of(unsigned g) const { return d_[g]; }

    // Linear-multiplicative extension to any slot-0 polynomial: each word
    // maps to the ordered product of generator matrices.
    PolyMatrix of_polynomial(const NCPolynomial& p, const TensorSpace& sp,
                             const ReduceOptions& opts = {}) const {
        PolyMatrix out(5, 5);
        for (const auto& [w, c] : p.terms()) {
            PolyMatrix m = mat_identity(5, order_);
            for (Letter l : w) m = mat_mul(m, d_[letter_rank(l)], sp, opts);
            out = mat_add(out, mat_scale(c, m));
        }
        return out;
    }

private:
    int order_;
    std::vector<PolyMatrix> d_;
};

// Spot values of the matrices plus the two relation suites: the classical
// brackets (z = 0 table) and the full deformed table, both of which the
// matrices must satisfy exactly. The deformed right sides collapse to the
// classical ones entrywise because every translation image squares to zero.
inline Report check_rep_relations(int order, const ReduceOptions& opts = {}) {
    using namespace gen::uzp31;
    using clock = std::chrono::steady_clock;
    Report rep;
    rep.suite = "rep";
    auto total0 = clock::now();
    Rep5 D(order);
    PresentationPtr U = build_uzp31(order);
    PresentationPtr Ucl = classical_presentation(U);
    TensorSpace sp = TensorSpace::plain(U); // entries are scalars, any slot works

    {
        PolyMatrix p1(5, 5);
        p1.at(2, 0) = NCPolynomial::one(order);
        detail::record_matrix(rep, "rep:value:P1", mat_sub(D.of(P1), p1), 0.0);
        PolyMatrix j3(5, 5);
        j3.at(2, 3) = NCPolynomial::one(order);
        j3.at(3, 2) = -NCPolynomial::one(order);
        detail::record_matrix(rep, "rep:value:J3", mat_sub(D.of(J3), j3), 0.0);
        detail::record_matrix(rep, "rep:nilpotent:P+^2", mat_mul(D.of(Pp), D.of(Pp), sp, opts), 0.0);
        detail::record_matrix(rep, "rep:bracket:E1,F1",
                              mat_sub(mat_commutator(D.of(E1), D.of(F1), sp, opts), D.of(K3)), 0.0);
    }

    auto bracket_suite = [&](const std::string& tag, const PresentationPtr& pres) {
        auto t0 = clock::now();
        PolyMatrix residual(5, 5);
        std::size_t bad = 0;
        for (unsigned hi = 0; hi < pres->size(); ++hi)
            for (unsigned lo = 0; lo < hi; ++lo) {
                PolyMatrix want(5, 5);
                if (const NCPolynomial* t = pres->commutator(hi, lo))
                    want = D.of_polynomial(*t, sp, opts);
                PolyMatrix got = mat_commutator(D.of(hi), D.of(lo), sp, opts);
                if (!mat_sub(got, want).is_zero()) ++bad;
            }
        CheckResult c;
        c.id = tag;
        c.pass = bad == 0;
        c.residual_terms = bad;
        c.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        rep.add(std::move(c));
    };
    bracket_suite("rep:brackets:classical", Ucl);
    bracket_suite("rep:brackets:deformed", U);

    rep.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - total0).count();
    return rep;
}

// D applied to both slots of a rank-2 element: words map to Kronecker
// products of the per-slot matrix images.
inline PolyMatrix rep_of_tensor(const Rep5& D, const NCPolynomial& p, const TensorSpace& sp,
                                const ReduceOptions& opts = {}) {
    PolyMatrix out(25, 25);
    for (const auto& [w, c] : p.terms()) {
        PolyMatrix m0 = mat_identity(5, D.order());
        PolyMatrix m1 = mat_identity(5, D.order());
        for (Letter l : w)
            (letter_slot(l) == 0 ? m0 : m1) = mat_mul(letter_slot(l) == 0 ? m0 : m1,
                                                      D.of(letter_rank(l)), sp, opts);
        out = mat_add(out, mat_scale(c, kron(m0, m1, sp, opts)));
    }
    return out;
}

// The representation image of R: evaluated two ways (factorwise matrix
// exponentials and the closed z-linear wedge form) and pushed through the
// 125-dimensional Yang-Baxter identity, exactly as z-polynomials.
inline Report check_rep_rmatrix(int order, const ReduceOptions& opts = {}) {
    using namespace gen::uzp31;
    using clock = std::chrono::steady_clock;
    Report rep;
    rep.suite = "rep-rmatrix";
    auto total0 = clock::now();
    Rep5 D(order);
    PresentationPtr U = build_uzp31(order);
    TensorSpace sp = TensorSpace::plain(U);

    auto wedge = [&](unsigned a, unsigned b) {
        return mat_sub(kron(D.of(a), D.of(b), sp, opts), kron(D.of(b), D.of(a), sp, opts));
    };
    PolyMatrix closed = mat_identity(25, order);
    PolyMatrix w = mat_add(mat_add(wedge(K3, Pp), wedge(E1, P1)), wedge(E2, P2));
    closed = mat_add(closed, mat_scale(ZSeries::monomial(2, 1, order), w));

    auto t0 = clock::now();
    UniversalR R = build_universal_R(order, opts);
    PolyMatrix factored = mat_identity(25, order);
    for (const NCPolynomial& f : R.factors)
        factored = mat_mul(factored, mat_exp(rep_of_tensor(D, f, sp, opts), sp, order, opts), sp, opts);
    detail::record_matrix(rep, "rep:rmatrix:wedge_form", mat_sub(factored, closed),
                          std::chrono::duration<double, std::milli>(clock::now() - t0).count());
    detail::record_matrix(rep, "rep:rmatrix:expanded_image",
                          mat_sub(rep_of_tensor(D, R.expanded, sp, opts), closed), 0.0);

    // Matrix QYBE on the 125-dimensional triple product.
    t0 = clock::now();
    PolyMatrix r12 = kron(closed, mat_identity(5, order), sp, opts);
    PolyMatrix r23 = kron(mat_identity(5, order), closed, sp, opts);
    PolyMatrix r13(125, 125);
    for (unsigned i = 0; i < 5; ++i)
        for (unsigned k = 0; k < 5; ++k)
            for (unsigned i2 = 0; i2 < 5; ++i2)
                for (unsigned k2 = 0; k2 < 5; ++k2) {
                    const NCPolynomial& v = closed.at(i * 5 + k, i2 * 5 + k2);
                    if (v.is_zero()) continue;
                    for (unsigned j = 0; j < 5; ++j)
                        r13.at((i * 5 + j) * 5 + k, (i2 * 5 + j) * 5 + k2) = v;
                }
    PolyMatrix lhs = mat_mul(mat_mul(r12, r13, sp, opts), r23, sp, opts);
    PolyMatrix rhs = mat_mul(mat_mul(r23, r13, sp, opts), r12, sp, opts);
    detail::record_matrix(rep, "rep:rmatrix:qybe125", mat_sub(lhs, rhs),
                          std::chrono::duration<double, std::milli>(clock::now() - t0).count());

    rep.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - total0).count();
    return rep;
}

// Matrix form of the dual-basis pairing element in the 5x5 representation,
// over the group-like coordinate alphabet. The boost factor exponential is
// entered in closed form: its generator squares to the projector onto the
// light-cone plane, so exp collapses to cosh/sinh, i.e. (g+ +- g-)/2.
inline PolyMatrix build_rep_t(const PresentationPtr& GL, int order, const ReduceOptions& opts = {}) {
    using namespace gen::funzg_gl;
    Rep5 D(order);
    TensorSpace sp = TensorSpace::plain(GL);
    auto coord = [&](unsigned g) { return NCPolynomial::generator(0, g, order); };
    auto scaled = [&](const PolyMatrix& m, unsigned g) {
        PolyMatrix out = m;
        for (auto& p : out.e) p = nc_multiply(p, coord(g), sp, opts);
        return out;
    };
    using namespace gen;
    PolyMatrix t = mat_exp(scaled(D.of(uzp31::E2), he2), sp, order, opts);
    t = mat_mul(t, mat_exp(scaled(D.of(uzp31::E1), he1), sp, order, opts), sp, opts);
    t = mat_mul(t, mat_exp(scaled(D.of(uzp31::Pp), hap), sp, order, opts), sp, opts);
    {
        const ZSeries h = ZSeries::constant(Rational(1, 2), order);
        NCPolynomial ch = h * (coord(gp) + coord(gm));
        NCPolynomial sh = h * (coord(gp) - coord(gm));
        PolyMatrix boost = mat_identity(5, order);
        boost.at(1, 1) = ch;
        boost.at(4, 4) = ch;
        boost.at(1, 4) = sh;
        boost.at(4, 1) = sh;
        t = mat_mul(t, boost, sp, opts);
    }
    t = mat_mul(t, mat_exp(scaled(D.of(uzp31::P1), ha1), sp, order, opts), sp, opts);
    t = mat_mul(t, mat_exp(scaled(D.of(uzp31::P2), ha2), sp, order, opts), sp, opts);
    return t;
}

// The closed entrywise form the product must reproduce.
inline PolyMatrix expected_rep_t(const PresentationPtr& GL, int order) {
    using namespace gen::funzg_gl;
    auto word = [&](std::initializer_list<unsigned> gs, const Rational& c) {
        Word w;
        for (unsigned g : gs) w.push_back(make_letter(0, g));
        return NCPolynomial::word_term(std::move(w), ZSeries::constant(c, order));
    };
    const Rational h(1, 2), q(1, 8);
    NCPolynomial ch = word({gp}, h) + word({gm}, h);
    NCPolynomial sh = word({gp}, h) - word({gm}, h);
    NCPolynomial f = word({he1, he1, gm}, q) + word({he2, he2, gm}, q);
    NCPolynomial col0 = word({hap}, h) + word({he1, ha1}, h) + word({he2, ha2}, h);
    PolyMatrix t(5, 5);
    t.at(0, 0) = NCPolynomial::one(order);
    t.at(1, 0) = col0;
    t.at(1, 1) = ch + f;
    t.at(1, 2) = word({he1}, h);
    t.at(1, 3) = word({he2}, h);
    t.at(1, 4) = sh - f;
    t.at(2, 0) = word({ha1}, 1);
    t.at(2, 1) = word({he1, gm}, h);
    t.at(2, 2) = NCPolynomial::one(order);
    t.at(2, 4) = -word({he1, gm}, h);
    t.at(3, 0) = word({ha2}, 1);
    t.at(3, 1) = word({he2, gm}, h);
    t.at(3, 3) = NCPolynomial::one(order);
    t.at(3, 4) = -word({he2, gm}, h);
    t.at(4, 0) = col0;
    t.at(4, 1) = sh + f;
    t.at(4, 2) = word({he1}, h);
    t.at(4, 3) = word({he2}, h);
    t.at(4, 4) = ch - f;
    return t;
}

// The factorized pairing matrix against its closed form, and the matrix
// coproduct (T (*) T)_ij = sum_k T_ik (x) T_kj against the coalgebra tables,
// entry by entry and on the coordinate readout positions.
inline Report check_rep_t(int order, const ReduceOptions& opts = {}) {
    using namespace gen::funzg_gl;
    using clock = std::chrono::steady_clock;
    Report rep;
    rep.suite = "rep-t";
    auto total0 = clock::now();
    PresentationPtr GL = build_funzg_grouplike(order);
    TensorSpace g1 = TensorSpace::plain(GL);
    TensorSpace g2 = TensorSpace::power(GL, 2);

    auto t0 = clock::now();
    PolyMatrix T = build_rep_t(GL, order, opts);
    detail::record_matrix(rep, "rep:t:closed_form", mat_sub(T, expected_rep_t(GL, order)),
                          std::chrono::duration<double, std::milli>(clock::now() - t0).count());

    t0 = clock::now();
    PolyMatrix co(5, 5);
    for (unsigned i = 0; i < 5; ++i)
        for (unsigned j = 0; j < 5; ++j) {
            NCPolynomial s;
            for (unsigned k = 0; k < 5; ++k) {
                if (T.at(i, k).is_zero() || T.at(k, j).is_zero()) continue;
                s += tensor_product(T.at(i, k), g1, T.at(k, j), g2);
            }
            co.at(i, j) = normal_order(s, g2, opts);
        }
    PolyMatrix tabled(5, 5);
    for (unsigned i = 0; i < 5; ++i)
        for (unsigned j = 0; j < 5; ++j) tabled.at(i, j) = coproduct(T.at(i, j), GL, order, opts);
    detail::record_matrix(rep, "rep:t:matrix_coproduct", mat_sub(co, tabled),
                          std::chrono::duration<double, std::milli>(clock::now() - t0).count());

    // Coordinate readout: the matrix coproduct at the defining positions
    // reproduces the coalgebra of the six coordinates and of the group-like
    // boost symbols, written out independently of the stored tables.
    auto gp2 = [&](unsigned a, unsigned b) {
        return NCPolynomial::word_term({make_letter(0, a), make_letter(1, b)},
                                       ZSeries::one(order));
    };
    auto expect = [&](const std::string& id, const NCPolynomial& got, const NCPolynomial& want) {
        detail::record(rep, id, got - want, 0.0);
    };
    auto unit_right = [&](unsigned g) {
        return NCPolynomial::word_term({make_letter(0, g)}, ZSeries::one(order));
    };
    auto unit_left = [&](unsigned g) {
        return NCPolynomial::word_term({make_letter(1, g)}, ZSeries::one(order));
    };
    expect("rep:t:coproduct:ha1", co.at(2, 0), unit_right(ha1) + unit_left(ha1));
    expect("rep:t:coproduct:ha2", co.at(3, 0), unit_right(ha2) + unit_left(ha2));
    const ZSeries two = ZSeries::constant(2, order);
    expect("rep:t:coproduct:he1", two * co.at(1, 2), gp2(gp, he1) + unit_right(he1));
    expect("rep:t:coproduct:he2", two * co.at(1, 3), gp2(gp, he2) + unit_right(he2));
    expect("rep:t:coproduct:boost", co.at(1, 1) + co.at(1, 4), gp2(gp, gp));
    {
        NCPolynomial dap = two * co.at(1, 0);
        NCPolynomial e1a1 = coproduct(NCPolynomial::word_term({make_letter(0, he1), make_letter(0, ha1)},
                                                              ZSeries::one(order)),
                                      GL, order, opts);
        NCPolynomial e2a2 = coproduct(NCPolynomial::word_term({make_letter(0, he2), make_letter(0, ha2)},
                                                              ZSeries::one(order)),
                                      GL, order, opts);
        NCPolynomial want = gp2(gp, hap) + unit_right(hap);
        want.add_term({make_letter(0, gp), make_letter(0, ha1), make_letter(1, he1)}, -ZSeries::one(order));
        want.add_term({make_letter(0, gp), make_letter(0, ha2), make_letter(1, he2)}, -ZSeries::one(order));
        expect("rep:t:coproduct:ha+", dap - e1a1 - e2a2, want);
    }

    rep.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - total0).count();
    return rep;
}

} // namespace hopfv
