#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfv/polynomial.hpp"

namespace hopfv {

// Grading that controls truncation and the admissibility of exp():
// z-graded algebras truncate by z-order alone, degree-graded ones also cap the
// word degree (their structure series are infinite in word degree).
enum class Grading { z, degree };

struct Generator {
    std::string name;
};

// A finitely presented algebra with a PBW order on its generators, an
// antisymmetric commutator table, and optional coalgebra tables. Tables are
// stored normal-ordered; rank is the position in the generator list.
//
// Beyond commutators, a presentation may carry adjacent-pair substitution
// rules for non-commutator relations (group-like inverse pairs, quadratic
// constraint families). Rules apply to PBW-normal words during
// canonicalization.
class Presentation {
public:
    std::string label;
    Grading grading = Grading::z;
    int degree_cap = -1; // < 0: uncapped; >= 0 drops words above the cap

    std::size_t size() const { return gens_.size(); }
    const std::string& name(unsigned rank) const { return gens_[rank].name; }

    unsigned rank_of(const std::string& n) const {
        auto it = index_.find(n);
        if (it == index_.end()) fail(errc::unknown_generator, n + " in " + label);
        return it->second;
    }
    bool has_generator(const std::string& n) const { return index_.count(n) != 0; }

    void add_generator(const std::string& n) {
        if (index_.count(n)) fail(errc::duplicate_rule, "generator " + n + " declared twice");
        index_.emplace(n, static_cast<unsigned>(gens_.size()));
        gens_.push_back(Generator{n});
    }

    // Commutator [hi, lo] for hi > lo in rank, as a normal-ordered slot-0
    // polynomial. Missing entries mean the pair commutes.
    void set_commutator(unsigned hi, unsigned lo, NCPolynomial p) {
        if (hi <= lo) fail(errc::duplicate_rule, "commutator must be keyed by (higher, lower) rank");
        if (hi >= size() || lo >= size()) fail(errc::unknown_generator, "commutator rank out of range");
        auto key = table_key(hi, lo);
        if (table_.count(key)) fail(errc::duplicate_rule, "commutator for (" + name(hi) + "," + name(lo) + ") declared twice");
        if (!p.is_zero()) table_.emplace(key, std::move(p));
    }
    const NCPolynomial* commutator(unsigned hi, unsigned lo) const {
        auto it = table_.find(table_key(hi, lo));
        return it == table_.end() ? nullptr : &it->second;
    }
    bool commutes(unsigned a, unsigned b) const {
        if (a == b) return true;
        return commutator(std::max(a, b), std::min(a, b)) == nullptr;
    }

    // Coalgebra tables. Coproducts are rank-2 polynomials (slots 0 and 1),
    // counits scalar series, antipodes rank-1 polynomials.
    void set_coproduct(unsigned rank, NCPolynomial p) { coproduct_[rank] = std::move(p); }
    void set_counit(unsigned rank, ZSeries c) { counit_[rank] = std::move(c); }
    void set_antipode(unsigned rank, NCPolynomial p) { antipode_[rank] = std::move(p); }

    bool has_coproduct() const { return coproduct_.size() == size() && size() > 0; }
    bool has_counit() const { return counit_.size() == size() && size() > 0; }
    bool has_antipode() const { return antipode_.size() == size() && size() > 0; }

    const NCPolynomial& coproduct(unsigned rank) const { return coproduct_.at(rank); }
    const ZSeries& counit(unsigned rank) const { return counit_.at(rank); }
    const NCPolynomial& antipode(unsigned rank) const { return antipode_.at(rank); }

    // Adjacent-pair substitution rule: a normal word containing letters of
    // ranks (a, b), a <= b, next to each other (or separated only by letters
    // commuting with both) is rewritten with the pair replaced by rhs.
    struct PairRule {
        unsigned a, b;
        NCPolynomial rhs;
    };
    void add_pair_rule(unsigned a, unsigned b, NCPolynomial rhs) {
        if (a > b) std::swap(a, b);
        pair_rules_.push_back(PairRule{a, b, std::move(rhs)});
    }
    const std::vector<PairRule>& pair_rules() const { return pair_rules_; }

    // Builders size only the tables the presentation actually carries; an
    // absent table is how coalgebra-only presentations opt out of antipode
    // checks.
    void enable_coproduct() { coproduct_.resize(size()); }
    void enable_counit() { counit_.resize(size()); }
    void enable_antipode() { antipode_.resize(size()); }

private:
    static std::uint32_t table_key(unsigned hi, unsigned lo) { return (hi << 16) | lo; }

    std::vector<Generator> gens_;
    std::unordered_map<std::string, unsigned> index_;
    std::unordered_map<std::uint32_t, NCPolynomial> table_;
    std::vector<NCPolynomial> coproduct_;
    std::vector<ZSeries> counit_;
    std::vector<NCPolynomial> antipode_;
    std::vector<PairRule> pair_rules_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

// Tensor signature: one presentation per slot. Rank-1 spaces model plain
// algebra elements. Distinct slots always commute; mixed signatures (for
// example an enveloping-algebra slot against a dual-group slot) are allowed.
class TensorSpace {
public:
    TensorSpace() = default;
    explicit TensorSpace(std::vector<PresentationPtr> slots) : slots_(std::move(slots)) {}

    static TensorSpace plain(PresentationPtr p) { return TensorSpace({std::move(p)}); }
    static TensorSpace power(const PresentationPtr& p, unsigned k) {
        std::vector<PresentationPtr> s(k, p);
        return TensorSpace(std::move(s));
    }

    unsigned rank() const { return static_cast<unsigned>(slots_.size()); }
    const Presentation& slot(unsigned s) const {
        if (s >= slots_.size()) fail(errc::rank_mismatch, "slot index beyond tensor rank");
        return *slots_[s];
    }
    const PresentationPtr& slot_ptr(unsigned s) const { return slots_[s]; }

    bool same_signature(const TensorSpace& o) const {
        if (rank() != o.rank()) return false;
        for (unsigned s = 0; s < rank(); ++s)
            if (slots_[s].get() != o.slots_[s].get()) return false;
        return true;
    }

private:
    std::vector<PresentationPtr> slots_;
};

// Rendering helpers. Words print as slot groups joined by " (x) ", with powers
// collapsed; 1 stands for the empty group.
inline std::string word_to_string(const Word& w, const TensorSpace& sp) {
    if (w.empty()) return "1";
    std::string out;
    unsigned rank = sp.rank();
    std::size_t i = 0;
    for (unsigned s = 0; s < rank; ++s) {
        if (s > 0) out += " (x) ";
        bool any = false;
        while (i < w.size() && letter_slot(w[i]) == s) {
            unsigned r = letter_rank(w[i]);
            unsigned count = 0;
            while (i < w.size() && letter_slot(w[i]) == s && letter_rank(w[i]) == r) {
                ++count;
                ++i;
            }
            if (any) out += "*";
            out += sp.slot(s).name(r);
            if (count > 1) out += "^" + std::to_string(count);
            any = true;
        }
        if (!any) out += "1";
    }
    return out;
}

inline std::string poly_to_string(const NCPolynomial& p, const TensorSpace& sp) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")*" + word_to_string(w, sp);
    }
    return out;
}

} // namespace hopfv
