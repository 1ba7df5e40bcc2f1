#pragma once

// Factor counts over GF(2) by trial division. Polynomials are bitmasks,
// bit i the coefficient of t^i.

#include <bit>
#include <cstdint>

namespace oracle {

inline int f2_degree(std::uint64_t p) { return 63 - std::countl_zero(p); }

inline std::uint64_t f2_mod(std::uint64_t a, std::uint64_t b) {
    const int db = f2_degree(b);
    while (a && f2_degree(a) >= db) a ^= b << (f2_degree(a) - db);
    return a;
}

inline std::uint64_t f2_div(std::uint64_t a, std::uint64_t b) {
    std::uint64_t q = 0;
    const int db = f2_degree(b);
    while (a && f2_degree(a) >= db) {
        const int s = f2_degree(a) - db;
        q |= std::uint64_t{1} << s;
        a ^= b << s;
    }
    return q;
}

// Irreducible factors with multiplicity, ignoring powers of t.
inline int f2_factor_count(std::uint64_t p) {
    while (p && !(p & 1)) p >>= 1;
    int count = 0;
    for (std::uint64_t d = 3; p > 1;) {
        if (f2_mod(p, d) == 0) {
            p = f2_div(p, d);
            ++count;
        } else {
            ++d;
        }
    }
    return count;
}

}  // namespace oracle
