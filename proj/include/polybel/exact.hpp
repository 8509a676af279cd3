#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "polybel/errors.hpp"

namespace polybel::exact {

using i128 = __int128;
using i256 = boost::multiprecision::int256_t;

inline int sgn(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign of a + b without forming the (possibly overflowing) sum.
inline int sgn_sum(i128 a, i128 b) {
    if ((a >= 0) == (b >= 0)) {
        if (a == 0 && b == 0) return 0;
        return a >= 0 ? 1 : -1;
    }
    return sgn(a + b);  // opposite signs: |a+b| <= max(|a|,|b|)
}

inline double to_double(i128 v) {
    return static_cast<double>(v);
}

inline std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

// Exact num/den rounded half away from zero. den != 0; result must fit int64.
inline std::int64_t round_div_half_away(const i256& num, const i256& den) {
    i256 n = num, d = den;
    if (d < 0) {
        d = -d;
        n = -n;
    }
    i256 q = n / d;
    i256 r = n % d;
    if (r < 0) {
        if (2 * (-r) >= d) --q;
    } else {
        if (2 * r >= d) ++q;
    }
    if (q < std::numeric_limits<std::int64_t>::min() ||
        q > std::numeric_limits<std::int64_t>::max()) {
        throw InternalError("rounded division result exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(q);
}

}  // namespace polybel::exact
