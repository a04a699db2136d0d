#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace hopfind {

/* Exact arbitrary-precision arithmetic. GMP keeps rationals canonical
 * (gcd(num, den) = 1, den > 0) through all arithmetic. */
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// floor-mod into [0, n)
inline long mod_pos(long e, long n) {
    long r = e % n;
    return r < 0 ? r + n : r;
}

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long t = a % b; a = b; b = t; }
    return a;
}

} // namespace hopfind
