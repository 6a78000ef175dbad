#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hopfv/errors.hpp"
#include "hopfv/rational.hpp"

namespace hopfv {

// Formal power series in the deformation parameter z, truncated at a fixed
// order. A series of order N stores the coefficients of z^0..z^N; everything
// beyond is discarded. Arithmetic between series of different orders truncates
// to the smaller one, so precision loss is explicit and monotone.
class ZSeries {
public:
    ZSeries() : c_(1) {}
    explicit ZSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {}

    static ZSeries constant(const Rational& v, int order) {
        ZSeries s(order);
        s.c_[0] = v;
        return s;
    }
    static ZSeries one(int order) { return constant(1, order); }
    // v * z^k, identically zero when k exceeds the order.
    static ZSeries monomial(const Rational& v, int k, int order) {
        ZSeries s(order);
        if (k <= order) s.c_[static_cast<std::size_t>(k)] = v;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    Rational& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
    }
    // Index of the lowest nonzero coefficient; order()+1 when the series is zero,
    // so valuation sums compose correctly under truncation tests.
    int valuation() const {
        for (int k = 0; k <= order(); ++k)
            if (c_[static_cast<std::size_t>(k)] != 0) return k;
        return order() + 1;
    }
    int top_order() const { // highest nonzero power, -1 when zero
        for (int k = order(); k >= 0; --k)
            if (c_[static_cast<std::size_t>(k)] != 0) return k;
        return -1;
    }

    ZSeries truncated(int new_order) const {
        ZSeries s(new_order);
        int m = std::min(new_order, order());
        for (int k = 0; k <= m; ++k) s.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)];
        return s;
    }

    friend ZSeries operator+(const ZSeries& a, const ZSeries& b) {
        ZSeries r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
        return r;
    }
    friend ZSeries operator-(const ZSeries& a, const ZSeries& b) {
        ZSeries r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
        return r;
    }
    ZSeries operator-() const {
        ZSeries r = *this;
        for (auto& q : r.c_) q = -q;
        return r;
    }
    friend ZSeries operator*(const ZSeries& a, const ZSeries& b) {
        ZSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= std::min(a.order(), r.order()); ++i) {
            if (a[i] == 0) continue;
            int top = std::min(b.order(), r.order() - i);
            for (int j = 0; j <= top; ++j) {
                if (b[j] == 0) continue;
                r[i + j] += a[i] * b[j];
            }
        }
        return r;
    }
    friend ZSeries operator*(const Rational& v, const ZSeries& a) {
        ZSeries r = a;
        for (auto& q : r.c_) q *= v;
        return r;
    }
    ZSeries& operator+=(const ZSeries& b) { return *this = *this + b; }
    ZSeries& operator-=(const ZSeries& b) { return *this = *this - b; }
    ZSeries& operator*=(const ZSeries& b) { return *this = *this * b; }

    friend bool operator==(const ZSeries& a, const ZSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ZSeries& a, const ZSeries& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::vector<Rational> c_;
};

// exp of a series with vanishing constant term. Uses the first-order recurrence
// of exp(a): k*e_k = sum_{j=1..k} j*a_j*e_{k-j}.
inline ZSeries series_exp(const ZSeries& a) {
    if (a[0] != 0) fail(errc::exp_of_unit, "series exponential needs zero constant term");
    ZSeries e(a.order());
    e[0] = 1;
    for (int k = 1; k <= a.order(); ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) {
            if (a[j] == 0) continue;
            acc += Rational(j) * a[j] * e[k - j];
        }
        e[k] = acc / k;
    }
    return e;
}

// Multiplicative inverse of a series with nonzero constant term.
inline ZSeries series_inverse(const ZSeries& a) {
    if (a[0] == 0) fail(errc::inverse_of_non_unit, "series inverse needs nonzero constant term");
    ZSeries b(a.order());
    b[0] = 1 / a[0];
    for (int k = 1; k <= a.order(); ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) acc += a[j] * b[k - j];
        b[k] = -acc / a[0];
    }
    return b;
}

// Exact division by z^k; the argument must have valuation >= k. The result
// keeps the same order, with the freed top coefficients set to zero (they are
// unknown after the shift, but every caller divides expressions whose true top
// coefficients are representable; callers needing full precision divide before
// truncation-sensitive steps).
inline ZSeries series_shift_down(const ZSeries& a, int k) {
    for (int j = 0; j < k && j <= a.order(); ++j)
        if (a[j] != 0) fail(errc::division_mismatch, "division by z^k with valuation < k");
    ZSeries r(a.order());
    for (int j = 0; j + k <= a.order(); ++j) r[j] = a[j + k];
    return r;
}

inline std::string ZSeries::to_string() const {
    std::string out;
    for (int k = 0; k <= order(); ++k) {
        const Rational& q = c_[static_cast<std::size_t>(k)];
        if (q == 0) continue;
        Rational mag = q < 0 ? Rational(-q) : q;
        if (out.empty()) {
            if (q < 0) out += "-";
        } else {
            out += q < 0 ? " - " : " + ";
        }
        bool unit = (mag == 1);
        if (k == 0) {
            out += rational_string(mag);
        } else {
            if (!unit) {
                out += rational_string(mag);
                out += "*";
            }
            out += "z";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace hopfv
