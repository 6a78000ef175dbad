#pragma once

#include <algorithm>

#include "hopfv/engine.hpp"

namespace hopfv {

// Slot-signature surgery used by the coalgebra operations.
inline TensorSpace space_insert(const TensorSpace& sp, unsigned at, PresentationPtr pres) {
    std::vector<PresentationPtr> slots;
    for (unsigned s = 0; s < sp.rank(); ++s) {
        if (s == at) slots.push_back(pres);
        slots.push_back(sp.slot_ptr(s));
    }
    if (at == sp.rank()) slots.push_back(pres);
    return TensorSpace(std::move(slots));
}

inline TensorSpace space_erase(const TensorSpace& sp, unsigned at) {
    std::vector<PresentationPtr> slots;
    for (unsigned s = 0; s < sp.rank(); ++s)
        if (s != at) slots.push_back(sp.slot_ptr(s));
    return TensorSpace(std::move(slots));
}

// Retag slots of every word. Sound for any slot relabeling: within one source
// slot the letters keep their relative order, and whole slots commute, so a
// stable sort by target slot restores canonical form without commutator terms.
// Words violating a destination degree cap are dropped (they are exactly the
// truncated region).
inline NCPolynomial retag_slots(const NCPolynomial& p, const TensorSpace& dst,
                                const std::function<unsigned(unsigned)>& slot_map) {
    NCPolynomial out;
    for (const auto& [w, c] : p.terms()) {
        Word nw;
        nw.reserve(w.size());
        for (Letter l : w) nw.push_back(make_letter(slot_map(letter_slot(l)), letter_rank(l)));
        std::stable_sort(nw.begin(), nw.end(),
                         [](Letter a, Letter b) { return letter_slot(a) < letter_slot(b); });
        if (!detail::within_caps(nw, dst)) continue;
        out.add_term(std::move(nw), c);
    }
    return out;
}

// a (x) b: slots of b shifted past those of a. Words concatenate directly.
inline NCPolynomial tensor_product(const NCPolynomial& a, const TensorSpace& sp_a,
                                   const NCPolynomial& b, const TensorSpace& dst) {
    unsigned shift = sp_a.rank();
    NCPolynomial bs = retag_slots(b, dst, [&](unsigned s) { return s + shift; });
    NCPolynomial out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : bs.terms()) {
            ZSeries c = ca * cb;
            if (c.is_zero()) continue;
            Word w;
            w.reserve(wa.size() + wb.size());
            w.insert(w.end(), wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            if (!detail::within_caps(w, dst)) continue;
            out.add_term(std::move(w), c);
        }
    return out;
}

// Product of same-signature tensors.
inline NCPolynomial tensor_multiply(const NCPolynomial& a, const NCPolynomial& b,
                                    const TensorSpace& sp, const ReduceOptions& opts = {}) {
    return nc_multiply(a, b, sp, opts);
}

// sigma_{i,j}: exchange two slots carrying the same presentation.
inline NCPolynomial flip(const NCPolynomial& p, const TensorSpace& sp, unsigned i, unsigned j) {
    if (sp.slot_ptr(i).get() != sp.slot_ptr(j).get())
        fail(errc::rank_mismatch, "flip requires identical slot presentations");
    return retag_slots(p, sp, [&](unsigned s) { return s == i ? j : (s == j ? i : s); });
}

// Homomorphic extension of the generator coproduct table to a plain element.
inline NCPolynomial coproduct(const NCPolynomial& p, const PresentationPtr& pres, int order,
                              const ReduceOptions& opts = {}) {
    if (!pres->has_coproduct()) fail(errc::unknown_generator, "presentation " + pres->label + " lacks a coproduct table");
    TensorSpace dst = TensorSpace::power(pres, 2);
    auto image = [&](Letter l) { return pres->coproduct(letter_rank(l)); };
    return map_letters(p, dst, image, nullptr, opts);
}

// Delta applied to one tensor slot (rank k -> k+1).
inline NCPolynomial coproduct_on_slot(const NCPolynomial& t, const TensorSpace& sp, unsigned at,
                                      int order, const ReduceOptions& opts = {}) {
    const PresentationPtr& pres = sp.slot_ptr(at);
    if (!pres->has_coproduct()) fail(errc::unknown_generator, "presentation " + pres->label + " lacks a coproduct table");
    TensorSpace dst = space_insert(sp, at + 1, pres);
    auto image = [&](Letter l) -> NCPolynomial {
        unsigned s = letter_slot(l);
        if (s < at) return NCPolynomial::generator(s, letter_rank(l), order);
        if (s > at) return NCPolynomial::generator(s + 1, letter_rank(l), order);
        TensorSpace pair({pres, pres});
        return retag_slots(pres->coproduct(letter_rank(l)), dst,
                           [&](unsigned ts) { return at + ts; });
    };
    return map_letters(t, dst, image, nullptr, opts);
}

// Counit applied to one tensor slot (rank k -> k-1).
inline NCPolynomial counit_on_slot(const NCPolynomial& t, const TensorSpace& sp, unsigned at,
                                   int order, const ReduceOptions& opts = {}) {
    const PresentationPtr& pres = sp.slot_ptr(at);
    if (!pres->has_counit()) fail(errc::unknown_generator, "presentation " + pres->label + " lacks a counit table");
    TensorSpace dst = space_erase(sp, at);
    auto image = [&](Letter l) -> NCPolynomial {
        unsigned s = letter_slot(l);
        if (s < at) return NCPolynomial::generator(s, letter_rank(l), order);
        if (s > at) return NCPolynomial::generator(s - 1, letter_rank(l), order);
        return NCPolynomial::scalar(pres->counit(letter_rank(l)).truncated(order));
    };
    return map_letters(t, dst, image, nullptr, opts);
}

// Antipode applied to one tensor slot, as an antihomomorphism on that slot.
inline NCPolynomial antipode_on_slot(const NCPolynomial& t, const TensorSpace& sp, unsigned at,
                                     int order, const ReduceOptions& opts = {}) {
    const PresentationPtr& pres = sp.slot_ptr(at);
    if (!pres->has_antipode()) fail(errc::unknown_generator, "presentation " + pres->label + " lacks an antipode table");
    auto image = [&](Letter l) -> NCPolynomial {
        unsigned s = letter_slot(l);
        if (s != at) return NCPolynomial::generator(s, letter_rank(l), order);
        return retag_slots(pres->antipode(letter_rank(l)), sp, [&](unsigned) { return at; });
    };
    return map_letters(t, sp, image, [&](unsigned s) { return s == at; }, opts);
}

// Multiplication map on adjacent slots (rank k -> k-1): slot at+1 merges into
// slot at, preserving left-to-right order.
inline NCPolynomial multiply_slots(const NCPolynomial& t, const TensorSpace& sp, unsigned at,
                                   int order, const ReduceOptions& opts = {}) {
    if (sp.slot_ptr(at).get() != sp.slot_ptr(at + 1).get())
        fail(errc::rank_mismatch, "slot multiplication requires identical presentations");
    TensorSpace dst = space_erase(sp, at + 1);
    auto image = [&](Letter l) -> NCPolynomial {
        unsigned s = letter_slot(l);
        if (s <= at) return NCPolynomial::generator(s, letter_rank(l), order);
        return NCPolynomial::generator(s - 1, letter_rank(l), order);
    };
    return map_letters(t, dst, image, nullptr, opts);
}

// Multiplicative extension of the counit to a plain element.
inline ZSeries poly_counit(const NCPolynomial& p, const PresentationPtr& pres, int order) {
    if (!pres->has_counit()) fail(errc::unknown_generator, "presentation " + pres->label + " lacks a counit table");
    ZSeries out(order);
    for (const auto& [w, c] : p.terms()) {
        ZSeries f = c.truncated(order);
        for (Letter l : w) f *= pres->counit(letter_rank(l)).truncated(order);
        out += f;
    }
    return out;
}

} // namespace hopfv
