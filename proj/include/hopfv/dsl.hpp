#pragma once

#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "hopfv/algebras.hpp"

namespace hopfv {

// Text form of a presentation. Statements, each ended by ';':
//
//   algebra <name>;               label
//   grading z; | grading degree;  truncation grading (default z)
//   gen <name> order <k>;         generator at PBW position k
//   comm <a> <b> = <expr>;        commutator [a, b]
//   pair <a> <b> = <expr>;        adjacent-pair substitution a b -> expr
//   coprod <g> = <tensor-expr>;   '@' separates tensor slots
//   counit <g> = <scalar-expr>;
//   antipode <g> = <expr>;
//
// Expressions use integers, 'z', generator names, + - * / ( ) and exp(...),
// with '@' binding between '+' and '*'. exp() needs every term of its argument
// at z-order >= 1 (z grading) or word degree >= 1 (degree grading), so the
// truncated sum is finite. Division is by scalar series only. Parsing
// evaluates with two orders of z headroom, so quotients like
// (exp(2*z*P+) - 1)/(2*z) keep their full top-order words, then truncates
// tables to the requested order.

namespace detail {

struct DslToken {
    enum Kind { ident, number, punct, end } kind = end;
    std::string text;
    int line = 1, col = 1;
};

inline bool dsl_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline std::vector<DslToken> dsl_lex(const std::string& src) {
    std::vector<DslToken> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto step = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') step(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            step(1);
            continue;
        }
        DslToken t;
        t.line = line;
        t.col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            t.kind = DslToken::number;
            t.text = src.substr(i, j - i);
            step(j - i);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && dsl_ident_char(src[j])) ++j;
            // A trailing + or - joins the name ("P+", "g-") unless it reads as
            // a binary operator, i.e. unless an operand starts right after it.
            if (j < src.size() && (src[j] == '+' || src[j] == '-') &&
                (j + 1 >= src.size() || (!dsl_ident_char(src[j + 1]) && src[j + 1] != '(')))
                ++j;
            t.kind = DslToken::ident;
            t.text = src.substr(i, j - i);
            step(j - i);
        } else if (std::string("+-*/()@;=").find(c) != std::string::npos) {
            t.kind = DslToken::punct;
            t.text = std::string(1, c);
            step(1);
        } else {
            fail(errc::parse_error, "line " + std::to_string(line) + ":" + std::to_string(col) +
                                        ": unexpected character '" + std::string(1, c) + "'");
        }
        out.push_back(std::move(t));
    }
    DslToken t;
    t.kind = DslToken::end;
    t.line = line;
    t.col = col;
    out.push_back(std::move(t));
    return out;
}

// Product in the free tensor algebra: per-slot concatenation (distinct slots
// commute, so the slot blocks merge in slot order).
inline NCPolynomial dsl_free_mul(const NCPolynomial& a, const NCPolynomial& b) {
    NCPolynomial out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            ZSeries c = ca * cb;
            if (c.is_zero()) continue;
            unsigned top = 0;
            for (Letter l : wa) top = std::max(top, letter_slot(l));
            for (Letter l : wb) top = std::max(top, letter_slot(l));
            Word w;
            for (unsigned s = 0; s <= top; ++s) {
                for (Letter l : wa)
                    if (letter_slot(l) == s) w.push_back(l);
                for (Letter l : wb)
                    if (letter_slot(l) == s) w.push_back(l);
            }
            out.add_term(std::move(w), c);
        }
    return out;
}

class DslParser {
public:
    DslParser(const std::string& src, int order, int degree_cap)
        : toks_(dsl_lex(src)), final_order_(order), work_order_(order + 2),
          degree_cap_arg_(degree_cap) {
        pres_ = std::make_shared<Presentation>();
    }

    PresentationPtr run() {
        while (!at_end()) statement();
        finish_tables();
        return pres_;
    }

private:
    std::vector<DslToken> toks_;
    std::size_t pos_ = 0;
    int final_order_;
    int work_order_;
    int degree_cap_arg_;
    int work_cap_ = -1; // active word-degree cap during evaluation
    std::shared_ptr<Presentation> pres_;
    bool rules_started_ = false;
    std::set<unsigned> coprod_set_, counit_set_, antipode_set_;
    std::set<std::pair<unsigned, unsigned>> pairs_set_;

    const DslToken& cur() const { return toks_[pos_]; }
    bool at_end() const { return cur().kind == DslToken::end; }

    [[noreturn]] void err(const std::string& what) const {
        fail(errc::parse_error, "line " + std::to_string(cur().line) + ":" +
                                    std::to_string(cur().col) + ": " + what);
    }
    DslToken take() { return toks_[pos_++]; }
    bool accept_punct(const char* p) {
        if (cur().kind == DslToken::punct && cur().text == p) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect_punct(const char* p) {
        if (!accept_punct(p)) err("expected '" + std::string(p) + "'");
    }
    std::string expect_ident(const char* what) {
        if (cur().kind != DslToken::ident) err(std::string("expected ") + what);
        return take().text;
    }

    unsigned rank_of(const std::string& n) const {
        if (!pres_->has_generator(n))
            fail(errc::unknown_generator,
                 "line " + std::to_string(cur().line) + ": undeclared generator '" + n + "'");
        return pres_->rank_of(n);
    }

    void statement() {
        std::string kw = expect_ident("a statement keyword");
        if (kw == "algebra") {
            // Labels may contain '-' (which lexes as an operator), so the
            // name is everything up to the ';'.
            std::string label;
            while (!(cur().kind == DslToken::punct && cur().text == ";")) {
                if (cur().kind == DslToken::end) err("expected ';'");
                label += take().text;
            }
            if (label.empty()) err("expected an algebra name");
            pres_->label = label;
        } else if (kw == "grading") {
            std::string g = expect_ident("'z' or 'degree'");
            if (g == "z")
                pres_->grading = Grading::z;
            else if (g == "degree")
                pres_->grading = Grading::degree;
            else
                err("expected 'z' or 'degree'");
            if (pres_->grading == Grading::degree) {
                pres_->degree_cap = degree_cap_arg_ >= 0 ? degree_cap_arg_ : final_order_;
                work_cap_ = pres_->degree_cap;
            } else {
                pres_->degree_cap = -1;
                work_cap_ = -1;
            }
        } else if (kw == "gen") {
            if (rules_started_) err("generator declared after the first rule");
            std::string name = expect_ident("a generator name");
            std::string ord = expect_ident("'order'");
            if (ord != "order") err("expected 'order'");
            if (cur().kind != DslToken::number) err("expected a rank");
            unsigned rank = static_cast<unsigned>(std::stoul(take().text));
            if (rank != pres_->size())
                err("generator '" + name + "' declares order " + std::to_string(rank) +
                    " but comes " + std::to_string(pres_->size()) + "th");
            pres_->add_generator(name);
        } else if (kw == "comm" || kw == "pair") {
            rules_started_ = true;
            unsigned a = rank_of(expect_ident("a generator name"));
            unsigned b = rank_of(expect_ident("a generator name"));
            expect_punct("=");
            NCPolynomial v = finalize(expr(), 0);
            if (kw == "comm") {
                if (a == b) err("commutator of a generator with itself");
                if (a > b)
                    pres_->set_commutator(a, b, std::move(v));
                else
                    pres_->set_commutator(b, a, -v);
            } else {
                auto key = std::minmax(a, b);
                if (!pairs_set_.insert({key.first, key.second}).second)
                    fail(errc::duplicate_rule, "pair rule declared twice");
                pres_->add_pair_rule(a, b, std::move(v));
            }
        } else if (kw == "coprod") {
            rules_started_ = true;
            unsigned r = rank_of(expect_ident("a generator name"));
            expect_punct("=");
            NCPolynomial v = finalize(expr(), 1);
            if (coprod_set_.empty()) pres_->enable_coproduct();
            if (!coprod_set_.insert(r).second)
                fail(errc::duplicate_rule, "coprod " + pres_->name(r) + " declared twice");
            pres_->set_coproduct(r, std::move(v));
        } else if (kw == "counit") {
            rules_started_ = true;
            unsigned r = rank_of(expect_ident("a generator name"));
            expect_punct("=");
            NCPolynomial v = finalize(expr(), 0);
            if (!(v - NCPolynomial::scalar(v.constant_part(final_order_))).is_zero())
                err("counit of " + pres_->name(r) + " is not a scalar");
            if (counit_set_.empty()) pres_->enable_counit();
            if (!counit_set_.insert(r).second)
                fail(errc::duplicate_rule, "counit " + pres_->name(r) + " declared twice");
            pres_->set_counit(r, v.constant_part(final_order_));
        } else if (kw == "antipode") {
            rules_started_ = true;
            unsigned r = rank_of(expect_ident("a generator name"));
            expect_punct("=");
            NCPolynomial v = finalize(expr(), 0);
            if (antipode_set_.empty()) pres_->enable_antipode();
            if (!antipode_set_.insert(r).second)
                fail(errc::duplicate_rule, "antipode " + pres_->name(r) + " declared twice");
            pres_->set_antipode(r, std::move(v));
        } else {
            err("unknown statement '" + kw + "'");
        }
        expect_punct(";");
    }

    void finish_tables() const {
        auto complete = [&](const std::set<unsigned>& seen, const char* table) {
            if (seen.empty()) return;
            for (unsigned r = 0; r < pres_->size(); ++r)
                if (!seen.count(r))
                    fail(errc::parse_error, std::string(table) + " table misses generator '" +
                                                pres_->name(r) + "'");
        };
        complete(coprod_set_, "coprod");
        complete(counit_set_, "counit");
        complete(antipode_set_, "antipode");
    }

    // Truncate a working-order value to the final order and enforce caps.
    NCPolynomial finalize(const NCPolynomial& v, unsigned max_slot) {
        NCPolynomial out;
        for (const auto& [w, c] : v.terms()) {
            for (Letter l : w)
                if (letter_slot(l) > max_slot) err("tensor rank too high for this statement");
            if (!within_cap(w)) continue;
            ZSeries t = c.truncated(final_order_);
            if (!t.is_zero()) out.add_term(w, t);
        }
        return out;
    }
    bool within_cap(const Word& w) const {
        if (work_cap_ < 0) return true;
        unsigned top = 0;
        for (Letter l : w) top = std::max(top, letter_slot(l));
        for (unsigned s = 0; s <= top; ++s)
            if (word_slot_degree(w, s) > work_cap_) return false;
        return true;
    }
    NCPolynomial capped(const NCPolynomial& v) const {
        if (work_cap_ < 0) return v;
        NCPolynomial out;
        for (const auto& [w, c] : v.terms())
            if (within_cap(w)) out.add_term(w, c);
        return out;
    }

    // expr := tensor (('+'|'-') tensor)*
    NCPolynomial expr() {
        NCPolynomial v = tensor();
        while (cur().kind == DslToken::punct && (cur().text == "+" || cur().text == "-")) {
            bool minus = take().text == "-";
            NCPolynomial r = tensor();
            if (minus)
                v -= r;
            else
                v += r;
        }
        return v;
    }

    // tensor := term ('@' term)*, factor k landing in slot k
    NCPolynomial tensor() {
        NCPolynomial v = term();
        unsigned slot = 0;
        while (accept_punct("@")) {
            ++slot;
            NCPolynomial f = term();
            NCPolynomial shifted;
            for (const auto& [w, c] : f.terms()) {
                Word sw;
                for (Letter l : w) {
                    if (letter_slot(l) != 0) err("nested tensor factor");
                    sw.push_back(make_letter(slot, letter_rank(l)));
                }
                shifted.add_term(std::move(sw), c);
            }
            v = dsl_free_mul(v, shifted);
        }
        return v;
    }

    // term := unary (('*'|'/') unary)*
    NCPolynomial term() {
        NCPolynomial v = unary();
        while (cur().kind == DslToken::punct && (cur().text == "*" || cur().text == "/")) {
            bool div = take().text == "/";
            NCPolynomial r = unary();
            if (div)
                v = divide(v, r);
            else
                v = capped(dsl_free_mul(v, r));
        }
        return v;
    }

    NCPolynomial unary() {
        bool neg = false;
        while (cur().kind == DslToken::punct && (cur().text == "+" || cur().text == "-"))
            neg ^= take().text == "-";
        NCPolynomial v = primary();
        return neg ? -v : v;
    }

    NCPolynomial primary() {
        if (accept_punct("(")) {
            NCPolynomial v = expr();
            expect_punct(")");
            return v;
        }
        if (cur().kind == DslToken::number)
            return NCPolynomial::scalar(ZSeries::constant(Rational(take().text), work_order_));
        if (cur().kind != DslToken::ident) err("expected a value");
        if (cur().text == "z") {
            take();
            return NCPolynomial::scalar(ZSeries::monomial(1, 1, work_order_));
        }
        if (cur().text == "exp" && toks_[pos_ + 1].kind == DslToken::punct &&
            toks_[pos_ + 1].text == "(") {
            take();
            expect_punct("(");
            NCPolynomial a = expr();
            expect_punct(")");
            return exp_value(a);
        }
        return NCPolynomial::generator(0, rank_of(take().text), work_order_);
    }

    NCPolynomial divide(const NCPolynomial& a, const NCPolynomial& b) {
        ZSeries s = b.constant_part(work_order_);
        if (!(b - NCPolynomial::scalar(s)).is_zero()) err("division by a non-scalar");
        if (s.is_zero()) err("division by zero");
        int v = s.valuation();
        ZSeries inv = series_inverse(series_shift_down(s, v));
        NCPolynomial out;
        for (const auto& [w, c] : a.terms()) out.add_term(w, series_shift_down(c, v) * inv);
        return out;
    }

    NCPolynomial exp_value(const NCPolynomial& a) {
        for (const auto& [w, c] : a.terms()) {
            bool graded = pres_->grading == Grading::degree ? (!w.empty() || c.valuation() >= 1)
                                                            : c.valuation() >= 1;
            if (!graded) err("exp() argument has a term of grading order zero");
        }
        NCPolynomial sum = NCPolynomial::one(work_order_);
        NCPolynomial pw = sum;
        for (int k = 1; !pw.is_zero(); ++k) {
            if (k > 1000) fail(errc::non_convergent, "exp() did not terminate");
            pw = capped(dsl_free_mul(pw, a));
            pw = (Rational(1) / Rational(k)) * pw;
            sum += pw;
        }
        return sum;
    }
};

} // namespace detail

// Parse DSL text into a presentation with tables truncated at `order` (and the
// declared degree cap, defaulting to `degree_cap`, for degree-graded text).
inline PresentationPtr parse_presentation(const std::string& text, int order,
                                          int degree_cap = -1) {
    return detail::DslParser(text, order, degree_cap).run();
}

namespace detail {

inline std::string dsl_series_text(const ZSeries& c) {
    std::string out;
    for (int k = 0; k <= c.order(); ++k) {
        if (c[k] == 0) continue;
        if (!out.empty()) out += " + ";
        out += rational_string(c[k]);
        for (int j = 0; j < k; ++j) out += "*z";
    }
    return out.empty() ? "0" : out;
}

inline std::string dsl_poly_text(const NCPolynomial& p, const Presentation& pres, bool tensor2) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + dsl_series_text(c) + ")";
        std::string slot0, slot1;
        for (Letter l : w) {
            std::string& dst = letter_slot(l) == 0 ? slot0 : slot1;
            if (!dst.empty()) dst += "*";
            dst += pres.name(letter_rank(l));
        }
        if (!slot0.empty()) out += "*" + slot0;
        if (tensor2) out += " @ " + (slot1.empty() ? "1" : slot1);
    }
    return out;
}

} // namespace detail

// Canonical text for a presentation: expanded tables, no exp()/division, so
// reparsing at the same order reproduces the same tables.
inline std::string serialize_presentation(const PresentationPtr& P) {
    std::string out;
    out += "algebra " + P->label + ";\n";
    if (P->grading == Grading::degree) out += "grading degree;\n";
    for (unsigned r = 0; r < P->size(); ++r)
        out += "gen " + P->name(r) + " order " + std::to_string(r) + ";\n";
    for (unsigned hi = 1; hi < P->size(); ++hi)
        for (unsigned lo = 0; lo < hi; ++lo)
            if (const NCPolynomial* c = P->commutator(hi, lo))
                out += "comm " + P->name(hi) + " " + P->name(lo) + " = " +
                       detail::dsl_poly_text(*c, *P, false) + ";\n";
    for (const auto& pr : P->pair_rules())
        out += "pair " + P->name(pr.a) + " " + P->name(pr.b) + " = " +
               detail::dsl_poly_text(pr.rhs, *P, false) + ";\n";
    if (P->has_coproduct())
        for (unsigned r = 0; r < P->size(); ++r)
            out += "coprod " + P->name(r) + " = " +
                   detail::dsl_poly_text(P->coproduct(r), *P, true) + ";\n";
    if (P->has_counit())
        for (unsigned r = 0; r < P->size(); ++r)
            out += "counit " + P->name(r) + " = " + detail::dsl_series_text(P->counit(r)) + ";\n";
    if (P->has_antipode())
        for (unsigned r = 0; r < P->size(); ++r)
            out += "antipode " + P->name(r) + " = " +
                   detail::dsl_poly_text(P->antipode(r), *P, false) + ";\n";
    return out;
}

// Semantic equality: same signature and the same tables modulo each side's
// normal form (entries may differ in word order when one side stores the
// defining product and the other its normal-ordered expansion).
inline bool presentations_equal(const PresentationPtr& a, const PresentationPtr& b,
                                const ReduceOptions& opts = {}) {
    if (a->label != b->label || a->grading != b->grading || a->degree_cap != b->degree_cap)
        return false;
    if (a->size() != b->size()) return false;
    for (unsigned r = 0; r < a->size(); ++r)
        if (a->name(r) != b->name(r)) return false;
    if (a->has_coproduct() != b->has_coproduct() || a->has_counit() != b->has_counit() ||
        a->has_antipode() != b->has_antipode())
        return false;
    if (a->pair_rules().size() != b->pair_rules().size()) return false;

    TensorSpace sp1 = TensorSpace::plain(a);
    TensorSpace sp2 = TensorSpace::power(a, 2);
    auto same = [&](const NCPolynomial& x, const NCPolynomial& y, const TensorSpace& sp) {
        return normal_order(x - y, sp, opts).is_zero();
    };
    for (std::size_t i = 0; i < a->pair_rules().size(); ++i) {
        const auto& pa = a->pair_rules()[i];
        const auto& pb = b->pair_rules()[i];
        if (pa.a != pb.a || pa.b != pb.b || !same(pa.rhs, pb.rhs, sp1)) return false;
    }
    for (unsigned hi = 1; hi < a->size(); ++hi)
        for (unsigned lo = 0; lo < hi; ++lo) {
            const NCPolynomial* ca = a->commutator(hi, lo);
            const NCPolynomial* cb = b->commutator(hi, lo);
            NCPolynomial da = ca ? *ca : NCPolynomial();
            NCPolynomial db = cb ? *cb : NCPolynomial();
            if (!same(da, db, sp1)) return false;
        }
    for (unsigned r = 0; r < a->size(); ++r) {
        if (a->has_coproduct() && !same(a->coproduct(r), b->coproduct(r), sp2)) return false;
        if (a->has_counit() && !(a->counit(r) - b->counit(r)).is_zero()) return false;
        if (a->has_antipode() && !same(a->antipode(r), b->antipode(r), sp1)) return false;
    }
    return true;
}

} // namespace hopfv
