// rational.hpp -- exact rational arithmetic used by every inequality check.
//
// All small-cancellation bounds in this library are strict inequalities;
// they are graded with exact rationals, never floating point.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace scforge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Largest integer <= q.
inline BigInt floor_rational(const Rational& q) {
    BigInt n = rational_num(q), d = rational_den(q);
    BigInt t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

/// Smallest integer >= q.
inline BigInt ceil_rational(const Rational& q) {
    BigInt n = rational_num(q), d = rational_den(q);
    BigInt t = n / d;
    if (n > 0 && t * d != n) ++t;
    return t;
}

inline std::string to_string(const Rational& q) {
    if (rational_den(q) == 1) return rational_num(q).str();
    return rational_num(q).str() + "/" + rational_den(q).str();
}

/// Parses "p", "-p" or "p/q" (q > 0 after normalization).
inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
        BigInt num{std::string(text.substr(0, slash))};
        BigInt den{std::string(text.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    }
}

inline double to_double(const Rational& q) {
    return q.convert_to<double>();
}

}  // namespace scforge
