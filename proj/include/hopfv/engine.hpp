#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <unordered_map>
#include <vector>

#include "hopfv/presentation.hpp"
#include "hopfv/report.hpp"

namespace hopfv {

// Rewrite controls. The budget bounds the number of worklist steps in one
// canonicalization; the strategy selects which inversion to resolve first and
// must not change the result (tested as a confluence property).
struct ReduceOptions {
    enum class Strategy { leftmost, rightmost, random };
    std::uint64_t budget = 10'000'000;
    Strategy strategy = Strategy::leftmost;
    std::uint64_t seed = 0;
};

namespace detail {

inline bool within_caps(const Word& w, const TensorSpace& sp) {
    for (unsigned s = 0; s < sp.rank(); ++s) {
        const Presentation& p = sp.slot(s);
        if (p.degree_cap >= 0 && word_slot_degree(w, s) > p.degree_cap) return false;
    }
    return true;
}

inline bool any_cap(const TensorSpace& sp) {
    for (unsigned s = 0; s < sp.rank(); ++s)
        if (sp.slot(s).degree_cap >= 0) return true;
    return false;
}

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::uint64_t h = 1469598103934665603ull;
        for (Letter l : w) {
            h ^= l;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Candidate pair-rule occurrence in a PBW-normal word: positions i < j in the
// same slot whose ranks match a rule, with every intervening letter commuting
// with both. Returns the rule or nullptr.
struct RuleHit {
    std::size_t i = 0, j = 0;
    const Presentation::PairRule* rule = nullptr;
};

inline RuleHit find_pair_rule(const Word& w, const TensorSpace& sp) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        unsigned s = letter_slot(w[i]);
        const Presentation& p = sp.slot(s);
        if (p.pair_rules().empty()) continue;
        for (std::size_t j = i + 1; j < w.size() && letter_slot(w[j]) == s; ++j) {
            for (const auto& r : p.pair_rules()) {
                if (letter_rank(w[i]) != r.a || letter_rank(w[j]) != r.b) continue;
                bool clear = true;
                for (std::size_t k = i + 1; k < j && clear; ++k)
                    clear = p.commutes(letter_rank(w[k]), r.a) && p.commutes(letter_rank(w[k]), r.b);
                if (clear) return RuleHit{i, j, &r};
            }
        }
    }
    return {};
}

} // namespace detail

// Canonicalization: PBW-orders every word against the slot commutator tables
// (adjacent transposition plus table term), drops words beyond declared degree
// caps or with z-truncated-to-zero coefficients, then applies pair rules until
// none match. The worklist merges coefficients per word, so identical words
// are reduced once per wave.
inline NCPolynomial normal_order(const NCPolynomial& p, const TensorSpace& sp,
                                 const ReduceOptions& opts = {}) {
    NCPolynomial done;
    std::unordered_map<Word, ZSeries, detail::WordHash> todo;
    const bool capped = detail::any_cap(sp);
    // Adjacent transpositions with no table entry (distinct slots always,
    // same slot when the commutator is zero) are exact, so they are closed
    // in place before a word enters the worklist; funnelling each one through
    // the map costs a full insert/extract round trip and dominates long
    // words. Words normal after the closure skip the queue unless a pair
    // rule still fires.
    auto exact_swaps = [&sp](Word& w) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                if (w[i] <= w[i + 1]) continue;
                unsigned sa = letter_slot(w[i]);
                if (sa == letter_slot(w[i + 1]) &&
                    sp.slot(sa).commutator(letter_rank(w[i]), letter_rank(w[i + 1])))
                    continue;
                std::swap(w[i], w[i + 1]);
                changed = true;
            }
        }
    };
    auto push = [&](Word w, ZSeries c) {
        if (c.is_zero() || (capped && !detail::within_caps(w, sp))) return;
        exact_swaps(w);
        if (word_is_normal(w) && !detail::find_pair_rule(w, sp).rule) {
            done.add_term(std::move(w), std::move(c));
            return;
        }
        auto [it, fresh] = todo.try_emplace(std::move(w), std::move(c));
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) todo.erase(it);
        }
    };
    for (const auto& [w, c] : p.terms()) push(w, c);

    std::mt19937_64 rng(opts.seed);
    std::uint64_t steps = 0;
    std::vector<std::size_t> inversions;
    while (!todo.empty()) {
        if (++steps > opts.budget)
            fail(errc::non_terminating, "rewrite budget exhausted after " + std::to_string(steps - 1) + " steps");
        auto node = todo.extract(todo.begin());
        Word w = std::move(node.key());
        ZSeries c = std::move(node.mapped());

        inversions.clear();
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) inversions.push_back(i);

        if (!inversions.empty()) {
            std::size_t i;
            switch (opts.strategy) {
            case ReduceOptions::Strategy::leftmost: i = inversions.front(); break;
            case ReduceOptions::Strategy::rightmost: i = inversions.back(); break;
            default:
                i = inversions[std::uniform_int_distribution<std::size_t>(0, inversions.size() - 1)(rng)];
            }
            unsigned s_hi = letter_slot(w[i]), s_lo = letter_slot(w[i + 1]);
            Word swapped = w;
            std::swap(swapped[i], swapped[i + 1]);
            if (s_hi == s_lo) {
                const NCPolynomial* t = sp.slot(s_hi).commutator(letter_rank(w[i]), letter_rank(w[i + 1]));
                if (t) {
                    for (const auto& [tw, tc] : t->terms()) {
                        Word nw;
                        nw.reserve(w.size() - 2 + tw.size());
                        nw.insert(nw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                        for (Letter l : tw) nw.push_back(make_letter(s_hi, letter_rank(l)));
                        nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
                        push(std::move(nw), c * tc);
                    }
                }
            }
            push(std::move(swapped), c);
            continue;
        }

        auto hit = detail::find_pair_rule(w, sp);
        if (hit.rule) {
            unsigned s = letter_slot(w[hit.i]);
            Word base;
            base.reserve(w.size() - 2);
            base.insert(base.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(hit.i));
            base.insert(base.end(), w.begin() + static_cast<std::ptrdiff_t>(hit.i) + 1,
                        w.begin() + static_cast<std::ptrdiff_t>(hit.j));
            std::size_t cut = base.size();
            base.insert(base.end(), w.begin() + static_cast<std::ptrdiff_t>(hit.j) + 1, w.end());
            for (const auto& [tw, tc] : hit.rule->rhs.terms()) {
                Word nw;
                nw.reserve(base.size() + tw.size());
                nw.insert(nw.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(cut));
                for (Letter l : tw) nw.push_back(make_letter(s, letter_rank(l)));
                nw.insert(nw.end(), base.begin() + static_cast<std::ptrdiff_t>(cut), base.end());
                push(std::move(nw), c * tc);
            }
            continue;
        }

        done.add_term(std::move(w), c);
    }
    return done;
}

// Product in the tensor algebra: concatenate word pairs, multiply
// coefficients, canonicalize once as a batch. Pairs whose coefficient
// valuations already exceed the truncation order are skipped outright.
inline NCPolynomial nc_multiply(const NCPolynomial& a, const NCPolynomial& b, const TensorSpace& sp,
                                const ReduceOptions& opts = {}) {
    NCPolynomial raw;
    for (const auto& [wa, ca] : a.terms()) {
        int va = ca.valuation();
        for (const auto& [wb, cb] : b.terms()) {
            if (va + cb.valuation() > std::min(ca.order(), cb.order())) continue;
            Word w;
            w.reserve(wa.size() + wb.size());
            w.insert(w.end(), wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            raw.add_term(std::move(w), ca * cb);
        }
    }
    return normal_order(raw, sp, opts);
}

inline NCPolynomial nc_commutator(const NCPolynomial& a, const NCPolynomial& b, const TensorSpace& sp,
                                  const ReduceOptions& opts = {}) {
    return nc_multiply(a, b, sp, opts) - nc_multiply(b, a, sp, opts);
}

// exp(p) summed until the power vanishes under the ambient truncation
// (z-order, degree caps, or genuine nilpotency). `order` fixes the series
// truncation of the unit term when p is zero.
inline NCPolynomial nc_exp(const NCPolynomial& p, const TensorSpace& sp, int order,
                           const ReduceOptions& opts = {}, unsigned max_power = 256) {
    NCPolynomial sum = NCPolynomial::one(order);
    NCPolynomial term = sum;
    for (unsigned k = 1; k <= max_power; ++k) {
        term = Rational(1, k) * nc_multiply(term, p, sp, opts);
        if (term.is_zero()) return sum;
        sum += term;
    }
    fail(errc::non_convergent, "exp power series did not terminate within the power budget");
}

// Letter-wise substitution. Every letter is replaced by image(letter), a
// polynomial in the destination space; images multiply in word order, except
// inside slots for which reverse_slot is true, whose letters compose in
// reversed order (antihomomorphism on that slot).
inline NCPolynomial map_letters(const NCPolynomial& p, const TensorSpace& dst,
                                const std::function<NCPolynomial(Letter)>& image,
                                const std::function<bool(unsigned)>& reverse_slot,
                                const ReduceOptions& opts = {}) {
    NCPolynomial out;
    for (const auto& [w, c] : p.terms()) {
        NCPolynomial acc = NCPolynomial::scalar(c);
        std::size_t i = 0;
        while (i < w.size()) {
            unsigned s = letter_slot(w[i]);
            std::size_t j = i;
            while (j < w.size() && letter_slot(w[j]) == s) ++j;
            if (reverse_slot && reverse_slot(s)) {
                for (std::size_t k = j; k-- > i;) acc = nc_multiply(acc, image(w[k]), dst, opts);
            } else {
                for (std::size_t k = i; k < j; ++k) acc = nc_multiply(acc, image(w[k]), dst, opts);
            }
            i = j;
        }
        out += acc;
    }
    return out;
}

enum class MapMode { homomorphism, antihomomorphism };

// Generator substitution for plain (rank-1) elements: images indexed by rank,
// already expressed in the destination space's slot 0.
inline NCPolynomial apply_generator_map(const NCPolynomial& p, const TensorSpace& dst,
                                        const std::vector<NCPolynomial>& images, MapMode mode,
                                        const ReduceOptions& opts = {}) {
    auto image = [&](Letter l) -> NCPolynomial {
        if (letter_slot(l) != 0) fail(errc::rank_mismatch, "generator map applies to plain elements");
        if (letter_rank(l) >= images.size()) fail(errc::unmapped_generator, "no image for rank " + std::to_string(letter_rank(l)));
        return images[letter_rank(l)];
    };
    return map_letters(p, dst, image, [&](unsigned) { return mode == MapMode::antihomomorphism; }, opts);
}

// Jacobi identity over all generator triples of a presentation. The optional
// residual_vanishes hook plays the same role as in HopfCheckConfig: a nonzero
// normal form passes when it lies in the relation ideal the rewrite rules only
// orient one way. compare_degree likewise mirrors HopfCheckConfig: residuals
// of degree-capped presentations are only exact below the cap minus the
// z-order headroom, so callers restrict the comparison there.
inline Report check_jacobi(const PresentationPtr& pres, int order, const ReduceOptions& opts = {},
                           const std::function<bool(const NCPolynomial&)>& residual_vanishes = {},
                           int compare_degree = -1) {
    TensorSpace sp = TensorSpace::plain(pres);
    Report rep;
    rep.suite = "jacobi:" + pres->label;
    std::vector<NCPolynomial> g;
    for (unsigned r = 0; r < pres->size(); ++r) g.push_back(NCPolynomial::generator(0, r, order));
    for (unsigned i = 0; i < pres->size(); ++i)
        for (unsigned j = i + 1; j < pres->size(); ++j)
            for (unsigned k = j + 1; k < pres->size(); ++k) {
                NCPolynomial r = nc_commutator(g[i], nc_commutator(g[j], g[k], sp, opts), sp, opts);
                r += nc_commutator(g[j], nc_commutator(g[k], g[i], sp, opts), sp, opts);
                r += nc_commutator(g[k], nc_commutator(g[i], g[j], sp, opts), sp, opts);
                if (compare_degree >= 0) r = r.filtered_by_degree(compare_degree);
                CheckResult c;
                c.id = "jacobi:" + pres->name(i) + "," + pres->name(j) + "," + pres->name(k);
                c.pass = r.is_zero();
                if (!c.pass && residual_vanishes && residual_vanishes(r)) {
                    c.pass = true;
                    c.note = "vanishes modulo the relation ideal";
                }
                c.residual_terms = r.term_count();
                c.residual_order = r.max_z_order();
                rep.add(std::move(c));
            }
    return rep;
}

} // namespace hopfv
