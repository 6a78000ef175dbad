#pragma once

#include <ostream>

#include "hopfv/algebras.hpp"
#include "hopfv/hopf_checks.hpp"
#include "hopfv/tensor.hpp"

namespace hopfv {

// The universal R-matrix as an ordered product of six exponentials
//   R = e^{2zE2(x)P2} e^{2zE1(x)P1} e^{-2zP+(x)K3}
//       e^{2zK3(x)P+} e^{-2zP1(x)E1} e^{-2zP2(x)E2},
// expanded to the working z-order, together with its inverse (the reversed
// product of negated exponents) and the two-factor grouping R = e^{A1}e^{A2}.
struct UniversalR {
    TensorSpace space; // rank-2 tensor square of the ten-generator algebra
    std::vector<NCPolynomial> factors;
    NCPolynomial expanded;
    NCPolynomial inverse;
    NCPolynomial a1, a2;
};

inline UniversalR build_universal_R(int order, const ReduceOptions& opts = {}) {
    using namespace gen::uzp31;
    PresentationPtr U = build_uzp31(order);
    UniversalR R{TensorSpace::power(U, 2), {}, {}, {}, {}, {}};
    auto pair = [&](const Rational& c, unsigned a, unsigned b) {
        return NCPolynomial::word_term({make_letter(0, a), make_letter(1, b)},
                                       ZSeries::monomial(c, 1, order));
    };
    R.factors = {pair(2, E2, P2),  pair(2, E1, P1),  pair(-2, Pp, K3),
                 pair(2, K3, Pp),  pair(-2, P1, E1), pair(-2, P2, E2)};
    R.expanded = NCPolynomial::one(order);
    R.inverse = NCPolynomial::one(order);
    for (const NCPolynomial& f : R.factors)
        R.expanded = tensor_multiply(R.expanded, nc_exp(f, R.space, order, opts), R.space, opts);
    for (auto it = R.factors.rbegin(); it != R.factors.rend(); ++it)
        R.inverse = tensor_multiply(R.inverse, nc_exp(-*it, R.space, order, opts), R.space, opts);
    R.a1 = R.factors[1] + R.factors[0] + R.factors[2];
    R.a2 = R.factors[4] + R.factors[5] + R.factors[3];
    return R;
}

// Coefficient of z^k, word by word, as a constant-coefficient polynomial.
inline NCPolynomial poly_z_coefficient(const NCPolynomial& p, int k, int order) {
    NCPolynomial out;
    for (const auto& [w, c] : p.terms())
        if (c[k] != 0) out.add_term(w, ZSeries::constant(c[k], order));
    return out;
}

// Structure of the expanded R: unit at z^0, the classical r-matrix at z^1,
// two-sided inverse, triangularity flip(R)R = 1(x)1 (equivalently
// R^{-1} = flip(R)), and the exact regrouping into e^{A1}e^{A2} with
// A2 = -flip(A1).
inline Report check_rmatrix(int order, const ReduceOptions& opts = {}) {
    using clock = std::chrono::steady_clock;
    Report rep;
    rep.suite = "rmatrix";
    auto t0 = clock::now();
    UniversalR R = build_universal_R(order, opts);
    auto ms = [&] {
        double v = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        t0 = clock::now();
        return v;
    };
    double build_ms = ms();

    NCPolynomial unit = NCPolynomial::one(order);
    detail::record(rep, "rmatrix:z0_unit", poly_z_coefficient(R.expanded, 0, order) - unit,
                   build_ms);
    detail::record(rep, "rmatrix:z1_classical_r",
                   poly_z_coefficient(R.expanded, 1, order) - classical_r_matrix(order), ms());
    detail::record(rep, "rmatrix:unit_product",
                   tensor_multiply(R.expanded, R.inverse, R.space, opts) - unit, ms());
    NCPolynomial flipped = flip(R.expanded, R.space, 0, 1);
    detail::record(rep, "rmatrix:triangular",
                   tensor_multiply(flipped, R.expanded, R.space, opts) - unit, ms());
    detail::record(rep, "rmatrix:inverse_is_flip", R.inverse - flipped, ms());
    detail::record(rep, "rmatrix:a2_is_minus_flip_a1", R.a2 + flip(R.a1, R.space, 0, 1), ms());
    detail::record(rep, "rmatrix:a1a2_factorization",
                   tensor_multiply(nc_exp(R.a1, R.space, order, opts),
                                   nc_exp(R.a2, R.space, order, opts), R.space, opts) -
                       R.expanded,
                   ms());
    rep.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return rep;
}

// R Delta(X) = sigma(Delta(X)) R for every generator, stated multiplicatively
// so no inversion of R is needed.
inline Report check_intertwining(int order, const ReduceOptions& opts = {}) {
    using clock = std::chrono::steady_clock;
    Report rep;
    rep.suite = "intertwining";
    auto total0 = clock::now();
    UniversalR R = build_universal_R(order, opts);
    const PresentationPtr& U = R.space.slot_ptr(0);
    for (unsigned g = 0; g < U->size(); ++g) {
        auto t0 = clock::now();
        NCPolynomial d = coproduct(NCPolynomial::generator(0, g, order), U, order, opts);
        NCPolynomial lhs = tensor_multiply(R.expanded, d, R.space, opts);
        NCPolynomial rhs = tensor_multiply(flip(d, R.space, 0, 1), R.expanded, R.space, opts);
        detail::record(rep, "rmatrix:intertwine:" + U->name(g), lhs - rhs,
                       std::chrono::duration<double, std::milli>(clock::now() - t0).count());
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - total0).count();
    return rep;
}

// Quantum Yang-Baxter: R12 R13 R23 = R23 R13 R12 in the tensor cube.
inline Report check_qybe(int order, const ReduceOptions& opts = {}) {
    using clock = std::chrono::steady_clock;
    Report rep;
    rep.suite = "qybe";
    auto t0 = clock::now();
    UniversalR R = build_universal_R(order, opts);
    TensorSpace cube = TensorSpace::power(R.space.slot_ptr(0), 3);
    auto embed = [&](unsigned i, unsigned j) {
        return retag_slots(R.expanded, cube, [&](unsigned s) { return s == 0 ? i : j; });
    };
    NCPolynomial r12 = embed(0, 1), r13 = embed(0, 2), r23 = embed(1, 2);
    NCPolynomial lhs = tensor_multiply(tensor_multiply(r12, r13, cube, opts), r23, cube, opts);
    NCPolynomial rhs = tensor_multiply(tensor_multiply(r23, r13, cube, opts), r12, cube, opts);
    detail::record(rep, "rmatrix:qybe", lhs - rhs,
                   std::chrono::duration<double, std::milli>(clock::now() - t0).count());
    rep.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return rep;
}

// Sparse triplet dump of the expanded R: one word per line with its series.
inline void export_rmatrix(const UniversalR& R, std::ostream& os) {
    os << "# universal R, expanded (word coefficient)\n";
    for (const auto& [w, c] : R.expanded.terms())
        os << word_to_string(w, R.space) << " " << c.to_string() << "\n";
}

} // namespace hopfv
