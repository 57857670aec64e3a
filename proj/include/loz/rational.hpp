#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace loz {

// Exact rational arithmetic. All tiling counts and formula values live here;
// weighted counts are dyadic (denominator a power of two).
using Rat = mpq_class;

inline Rat rat(long n) { return Rat(n); }

inline Rat rat(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// 2^k for any integer k (negative k gives dyadic fractions).
inline Rat pow2(long k) {
    Rat r;
    if (k >= 0) {
        mpz_ui_pow_ui(r.get_num_mpz_t(), 2u, static_cast<unsigned long>(k));
    } else {
        r = 1;
        mpz_ui_pow_ui(r.get_den_mpz_t(), 2u, static_cast<unsigned long>(-k));
    }
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// True iff the reduced denominator is a power of two.
inline bool is_dyadic(const Rat& r) {
    mpz_class d = r.get_den();
    if (d == 1) return true;
    size_t bit = mpz_scan1(d.get_mpz_t(), 0);
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2u, bit);
    return p == d;
}

// Prints "n" when integral, "p/q" otherwise.
inline std::string to_string(const Rat& r) {
    return r.get_str();
}

}  // namespace loz
