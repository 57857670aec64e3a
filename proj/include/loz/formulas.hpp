#pragma once

#include "loz/rational.hpp"

namespace loz {

// Rising factorial with the three-branch convention: positive length rises,
// zero length is 1, negative length is the reciprocal of a falling product.
Rat pochhammer(const Rat& x, long n);

// Same with step 2 between factors.
Rat skipped_pochhammer(const Rat& x, long n);

// Nested products of (skipped) rising factorials whose length profile
// shrinks by two per level; negative depth inverts.
Rat trapezoid_T(const Rat& x, long n, long m);
Rat trapezoid_V(const Rat& x, long n, long m);

// Closed-form tiling counts. The `count_*` entry points validate their
// parameter domains; the *_core variants evaluate the same expressions
// permissively (empty products for out-of-range indices), which the
// composite formulas rely on at degenerate corners.
Rat count_P(long a, long b, long c);
Rat count_P_weighted(long a, long b, long c);
Rat count_B(long x, long a, long b, long c);
Rat count_B_weighted(long x, long a, long b, long c);
Rat count_H(int i, long x, long b, long c, long m, long a, long d);
Rat count_HS(long x, long y, long z, long m, long a, long b);

namespace detail {
Rat proctor_core(long a, long b, long c);
Rat proctor_weighted_core(long a, long b, long c);
Rat b_core(long x, long a, long b, long c);
Rat b_weighted_core(long x, long a, long b, long c);
Rat h_core(int i, long x, long b, long c, long m, long a, long d);
}  // namespace detail

}  // namespace loz
