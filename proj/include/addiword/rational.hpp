#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "addiword/errors.hpp"

namespace addiword {

// 128-bit intermediates keep sums and cross products exact; public values
// stay in int64 via checked narrowing.
using Int128 = __int128;

constexpr Int128 int128_abs(Int128 v) { return v < 0 ? -v : v; }

constexpr Int128 int128_gcd(Int128 a, Int128 b) {
    a = int128_abs(a);
    b = int128_abs(b);
    while (b != 0) {
        Int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline std::int64_t checked_i64(Int128 v) {
    constexpr Int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr Int128 hi = std::numeric_limits<std::int64_t>::max();
    if (v < lo || v > hi) throw OverflowError("value does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

inline std::string int128_str(Int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    std::string digits;
    while (v != 0) {
        int d = static_cast<int>(neg ? -(v % 10) : v % 10);
        digits.push_back(static_cast<char>('0' + d));
        v /= 10;
    }
    if (neg) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

// Exact fraction in lowest terms, den > 0. Reduced form makes equality
// componentwise, so comparisons never multiply out.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;

    Rational(Int128 n, Int128 d) {
        if (d == 0) throw DomainError("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const Int128 g = int128_gcd(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num = checked_i64(n);
        den = checked_i64(d);
    }

    friend bool operator==(const Rational&, const Rational&) = default;

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace addiword
