#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>

#include "kmlab/errors.hpp"

namespace kmlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient.
inline BigInt exact_binom(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (uint64_t i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact: product of j consecutive integers divides by j!
    }
    return r;
}

/// Exact binomial as uint64; requires n <= 64 so the value fits.
inline uint64_t binom_u64(uint32_t n, uint32_t k) {
    if (n > 64) throw ConfigError("binom_u64: n > 64");
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (uint32_t i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
    }
    return static_cast<uint64_t>(r);
}

/// log of binom(n, k); exact via integers for n <= 64, log-gamma above.
inline double lchoose(int64_t n, int64_t k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    if (k == 0 || k == n) return 0.0;
    if (n <= 64) return std::log(static_cast<double>(binom_u64(static_cast<uint32_t>(n), static_cast<uint32_t>(k))));
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

} // namespace kmlab
