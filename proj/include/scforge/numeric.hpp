// numeric.hpp -- integer square roots, exact powers of two, and certified
// base-2 logarithm enclosures.
//
// log2 of a non-power-of-two is irrational, so every log2 value is carried
// as a rational enclosure [lo, hi] with hi - lo <= 1/64 (declared precision),
// exact at powers of two. Callers pick the rounding direction that keeps
// their bound valid.

#pragma once

#include "scforge/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace scforge {

inline constexpr unsigned kLog2FracBits = 6;  // precision 2^-6 = 1/64

/// floor(log2(n)) for n >= 1.
inline std::int64_t floor_log2(const BigInt& n) {
    if (n < 1) throw std::invalid_argument("floor_log2: argument must be >= 1");
    std::int64_t k = -1;
    BigInt t = n;
    while (t > 0) { t >>= 1; ++k; }
    return k;
}

inline BigInt pow2(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("pow2: negative exponent");
    return BigInt(1) << static_cast<unsigned>(k);
}

/// ceil(sqrt(n)) for n >= 0, exact.
inline BigInt ceil_isqrt(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("ceil_isqrt: negative argument");
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r < n) ++r;
    return r;
}

inline std::int64_t ceil_isqrt_i64(std::int64_t n) {
    return ceil_isqrt(BigInt(n)).convert_to<std::int64_t>();
}

struct Log2Enclosure {
    Rational lo;
    Rational hi;
    bool exact;  // argument was an exact power of two
};

/// Certified enclosure of log2(x) for rational x > 0.
///
/// Uses the exact identity log2(x) = (floor_log2(x^64) + frac) / 64 with
/// frac in [0,1): both bounds are certified by integer comparisons only.
inline Log2Enclosure log2_enclosure(const Rational& x) {
    if (x <= 0) throw std::invalid_argument("log2_enclosure: argument must be positive");
    const unsigned scale = 1u << kLog2FracBits;  // 64
    // y = x^64 as an exact fraction; floor(log2(y)) = floor(64*log2(x)) needs care
    // with the fractional part: compute k with 2^k <= y < 2^(k+1).
    BigInt num = rational_num(x), den = rational_den(x);
    BigInt pnum = 1, pden = 1;
    for (unsigned i = 0; i < scale; ++i) { pnum *= num; pden *= den; }
    // k = floor(log2(pnum/pden)): find via bit lengths then adjust by comparison.
    std::int64_t k = floor_log2(pnum) - floor_log2(pden);
    // candidate k or k-1: 2^k <= pnum/pden  <=>  pnum >= pden << k
    auto le_pow = [&](std::int64_t e) {
        if (e >= 0) return pden << static_cast<unsigned>(e) <= pnum;
        return pden <= pnum << static_cast<unsigned>(-e);
    };
    while (!le_pow(k)) --k;
    while (le_pow(k + 1)) ++k;
    Rational lo(BigInt(k), BigInt(scale));
    bool exact = false;
    if (k >= 0 ? (pnum == pden << static_cast<unsigned>(k))
               : (pden == pnum << static_cast<unsigned>(-k))) {
        exact = true;
        return {lo, lo, true};
    }
    Rational hi(BigInt(k + 1), BigInt(scale));
    return {lo, hi, exact};
}

/// log2 rounded toward -infinity at the declared precision.
inline Rational log2_lower(const Rational& x) { return log2_enclosure(x).lo; }

/// log2 rounded toward +infinity at the declared precision.
inline Rational log2_upper(const Rational& x) { return log2_enclosure(x).hi; }

}  // namespace scforge
