#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "hopfv/errors.hpp"

namespace hopfv {

// Exact rational scalars. cpp_rational keeps the canonical reduced form with a
// positive denominator, which is exactly the invariant the engine relies on
// for equality tests and canonical printing.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) fail(errc::inverse_of_non_unit, "rational with zero denominator");
    return Rational(num, den);
}

inline Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

inline Rational rational_pow(const Rational& base, unsigned e) {
    Rational acc = 1;
    for (unsigned k = 0; k < e; ++k) acc *= base;
    return acc;
}

// Canonical text form: "n" or "n/d" with the sign on the numerator.
inline std::string rational_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace hopfv
