#pragma once

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <map>
#include <vector>

#include "hopfv/zseries.hpp"

namespace hopfv {

// A letter is one generator occurrence inside a word, packed as
// (tensor slot << 16) | rank. Plain algebra elements live in slot 0; a rank-k
// tensor uses slots 0..k-1. The packed integer order is exactly the canonical
// word order: slot-major, then PBW rank. A word is normal iff its letters are
// non-decreasing. The small-buffer word type keeps typical rewrite
// intermediates off the heap.
using Letter = std::uint32_t;
using Word = boost::container::small_vector<Letter, 16>;

constexpr Letter make_letter(unsigned slot, unsigned rank) {
    return static_cast<Letter>((slot << 16) | (rank & 0xffffu));
}
constexpr unsigned letter_slot(Letter l) { return l >> 16; }
constexpr unsigned letter_rank(Letter l) { return l & 0xffffu; }

inline bool word_is_normal(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] > w[i]) return false;
    return true;
}

inline int word_degree(const Word& w) { return static_cast<int>(w.size()); }

inline int word_slot_degree(const Word& w, unsigned slot) {
    int d = 0;
    for (Letter l : w)
        if (letter_slot(l) == slot) ++d;
    return d;
}

// Noncommutative polynomial: finitely many words with nonzero ZSeries
// coefficients. Kept canonical at all times: no zero coefficients are stored,
// and operations that can disorder words route through the rewrite engine.
class NCPolynomial {
public:
    using Terms = std::map<Word, ZSeries>;

    NCPolynomial() = default;

    static NCPolynomial scalar(const ZSeries& c) {
        NCPolynomial p;
        p.add_term(Word{}, c);
        return p;
    }
    static NCPolynomial one(int order) { return scalar(ZSeries::one(order)); }
    static NCPolynomial generator(unsigned slot, unsigned rank, int order) {
        NCPolynomial p;
        p.add_term(Word{make_letter(slot, rank)}, ZSeries::one(order));
        return p;
    }
    static NCPolynomial word_term(Word w, const ZSeries& c) {
        NCPolynomial p;
        p.add_term(std::move(w), c);
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const Terms& terms() const { return t_; }

    void add_term(Word w, const ZSeries& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.try_emplace(std::move(w), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    NCPolynomial& operator+=(const NCPolynomial& q) {
        for (const auto& [w, c] : q.t_) add_term(w, c);
        return *this;
    }
    NCPolynomial& operator-=(const NCPolynomial& q) {
        for (const auto& [w, c] : q.t_) add_term(w, -c);
        return *this;
    }
    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
    NCPolynomial operator-() const {
        NCPolynomial r;
        for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
        return r;
    }

    // Scalar (series) multiples commute with every word, so they act on the
    // coefficients directly.
    friend NCPolynomial operator*(const ZSeries& c, const NCPolynomial& p) {
        NCPolynomial r;
        for (const auto& [w, q] : p.t_) r.add_term(w, c * q);
        return r;
    }
    friend NCPolynomial operator*(const Rational& v, const NCPolynomial& p) {
        if (v == 0) return {};
        NCPolynomial r;
        for (const auto& [w, q] : p.t_) r.t_.emplace(w, v * q);
        return r;
    }

    friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) { return a.t_ == b.t_; }
    friend bool operator!=(const NCPolynomial& a, const NCPolynomial& b) { return !(a == b); }

    // Scalar part (coefficient of the empty word).
    ZSeries constant_part(int order) const {
        auto it = t_.find(Word{});
        return it == t_.end() ? ZSeries(order) : it->second;
    }

    int max_word_degree() const {
        int d = 0;
        for (const auto& [w, c] : t_) d = std::max(d, word_degree(w));
        return d;
    }
    int max_z_order() const {
        int d = -1;
        for (const auto& [w, c] : t_) d = std::max(d, c.top_order());
        return d;
    }
    unsigned max_slot() const {
        unsigned s = 0;
        for (const auto& [w, c] : t_)
            for (Letter l : w) s = std::max(s, letter_slot(l));
        return s;
    }

    // Restriction to words of total degree <= d (used for cap-stable
    // comparisons in degree-graded algebras).
    NCPolynomial filtered_by_degree(int d) const {
        NCPolynomial r;
        for (const auto& [w, c] : t_)
            if (word_degree(w) <= d) r.t_.emplace(w, c);
        return r;
    }
    // Coefficient extraction: the exact series attached to one word.
    ZSeries coefficient(const Word& w, int order) const {
        auto it = t_.find(w);
        return it == t_.end() ? ZSeries(order) : it->second;
    }

private:
    Terms t_;
};

} // namespace hopfv
