#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ncsym {

// All coefficients are exact rationals.  mpq_class keeps values canonical
// across arithmetic; only direct num/den construction needs canonicalize().
using Rat = mpq_class;

inline Rat ratio(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("ratio: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// mpq_class has no long long overloads; route through long (LP64).
inline Rat to_rat(long long v) { return Rat(static_cast<long>(v)); }

inline long long factorial_ll(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// n(n-1)...(n-k+1)
inline long long falling_ll(long long n, int k) {
    long long f = 1;
    for (int i = 0; i < k; ++i) f *= (n - i);
    return f;
}

// n(n+1)...(n+k-1)
inline long long rising_ll(long long n, int k) {
    long long f = 1;
    for (int i = 0; i < k; ++i) f *= (n + i);
    return f;
}

}  // namespace ncsym
