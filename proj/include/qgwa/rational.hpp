#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "qgwa/errors.hpp"

namespace qgwa {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;  // always canonical

// Floor of the non-negative g-th root, exact check by re-powering.
inline std::optional<Integer> integer_root(const Integer& v, long g) {
    if (v < 0 || g <= 0) throw ValidationError("integer_root: bad arguments");
    if (v == 0 || v == 1 || g == 1) return v;
    Integer lo = 1, hi = 1;
    while (boost::multiprecision::pow(hi, static_cast<unsigned>(g)) < v) hi <<= 1;
    while (lo < hi) {
        Integer mid = (lo + hi + 1) / 2;
        if (boost::multiprecision::pow(mid, static_cast<unsigned>(g)) <= v)
            lo = mid;
        else
            hi = mid - 1;
    }
    if (boost::multiprecision::pow(lo, static_cast<unsigned>(g)) == v) return lo;
    return std::nullopt;
}

// Exact g-th root of a rational, if one exists in Q. g >= 1.
inline std::optional<Rational> rational_root(const Rational& c, long g) {
    if (c == 0) throw ZeroElement("rational_root");
    if (g == 1) return c;
    const bool negative = c < 0;
    if (negative && g % 2 == 0) return std::nullopt;
    Integer num = boost::multiprecision::abs(numerator(c));
    Integer den = denominator(c);
    auto rn = integer_root(num, g);
    if (!rn) return std::nullopt;
    auto rd = integer_root(den, g);
    if (!rd) return std::nullopt;
    Rational r(*rn, *rd);
    return negative ? -r : r;
}

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace qgwa
