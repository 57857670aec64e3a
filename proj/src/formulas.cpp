#include "loz/formulas.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace loz {

namespace {

long floor_div(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

Rat safe_div(const Rat& num, const Rat& den) {
    if (den == 0) throw std::domain_error("zero denominator in formula evaluation");
    return num / den;
}

}  // namespace

Rat pochhammer(const Rat& x, long n) {
    Rat out = 1;
    if (n > 0) {
        for (long i = 0; i < n; ++i) out *= x + i;
    } else if (n < 0) {
        Rat den = 1;
        for (long i = -1; i >= n; --i) den *= x + i;
        if (den == 0) throw std::domain_error("pochhammer: zero factor in reciprocal branch");
        out = 1 / den;
    }
    return out;
}

Rat skipped_pochhammer(const Rat& x, long n) {
    Rat out = 1;
    if (n > 0) {
        for (long i = 0; i < n; ++i) out *= x + 2 * i;
    } else if (n < 0) {
        Rat den = 1;
        for (long i = -1; i >= n; --i) den *= x + 2 * i;
        if (den == 0) throw std::domain_error("skipped_pochhammer: zero factor in reciprocal branch");
        out = 1 / den;
    }
    return out;
}

Rat trapezoid_T(const Rat& x, long n, long m) {
    if (m == 0) return 1;
    if (m < 0) {
        Rat v = trapezoid_T(x, n, -m);
        if (v == 0) throw std::domain_error("trapezoid_T: zero value in reciprocal branch");
        return 1 / v;
    }
    Rat out = 1;
    for (long i = 0; i < m; ++i) out *= pochhammer(x + i, n - 2 * i);
    return out;
}

Rat trapezoid_V(const Rat& x, long n, long m) {
    if (m == 0) return 1;
    if (m < 0) {
        Rat v = trapezoid_V(x, n, -m);
        if (v == 0) throw std::domain_error("trapezoid_V: zero value in reciprocal branch");
        return 1 / v;
    }
    Rat out = 1;
    for (long i = 0; i < m; ++i) out *= skipped_pochhammer(x + 2 * i, n - 2 * i);
    return out;
}

namespace detail {

Rat proctor_core(long a, long b, long c) {
    Rat out = 1;
    for (long i = 1; i <= a; ++i) {
        for (long j = 1; j <= b - a + 1; ++j) out *= rat(c + i + j - 1, i + j - 1);
        for (long j = b - a + 2; j <= b - a + i; ++j) out *= rat(2 * c + i + j - 1, i + j - 1);
    }
    return out;
}

Rat proctor_weighted_core(long a, long b, long c) {
    if (a <= 0) return 1;
    Rat out = pow2(-a);
    for (long i = 1; i <= a; ++i) out *= rat(2 * c + b - a + i, c + b - a + i);
    return out * proctor_core(a, b, c);
}

Rat b_core(long x, long a, long b, long c) {
    long f = floor_div(c + 1, 2);
    Rat base = proctor_core(c, c, a);
    if (((b % 2) + 2) % 2 == 1) {
        return base * trapezoid_V(2 * x + 2 * a + b + 2, c, f) / trapezoid_V(2 * a + b + 2, c, f) *
               trapezoid_T(x + 1, 2 * a + b + c, b) * trapezoid_T(rat(2 * x + 2 * a + b + 3, 2), c - 1, f) /
               (trapezoid_T(1, 2 * a + b + c, b) * trapezoid_T(rat(2 * a + b + 3, 2), c - 1, f));
    }
    return base * trapezoid_V(2 * x + 2 * a + b + 3, c - 1, f) / trapezoid_V(2 * a + b + 3, c - 1, f) *
           trapezoid_T(x + 1, 2 * a + b + c, b) * trapezoid_T(x + a + (b + 2) / 2, c, f) /
           (trapezoid_T(1, 2 * a + b + c, b) * trapezoid_T(a + (b + 2) / 2, c, f));
}

Rat b_weighted_core(long x, long a, long b, long c) {
    long f = floor_div(c + 1, 2);
    Rat base = proctor_weighted_core(c, c, a);
    if (((b % 2) + 2) % 2 == 1) {
        return base * trapezoid_V(2 * x + 2 * a + b + 2, c - 1, f) / trapezoid_V(2 * a + b + 2, c - 1, f) *
               trapezoid_T(x + 1, 2 * a + b + c - 1, b) * trapezoid_T(x + a + (b + 1) / 2, c, f) /
               (trapezoid_T(1, 2 * a + b + c - 1, b) * trapezoid_T(a + (b + 1) / 2, c, f));
    }
    return base * trapezoid_V(2 * x + 2 * a + b + 1, c, f) / trapezoid_V(2 * a + b + 1, c, f) *
           trapezoid_T(x + 1, 2 * a + b + c - 1, b) * trapezoid_T(x + a + (b + 2) / 2, c - 1, f) /
           (trapezoid_T(1, 2 * a + b + c - 1, b) * trapezoid_T(a + (b + 2) / 2, c - 1, f));
}

namespace {

// One record per halved-hexagon family: which sub-counts it multiplies and
// the shifts appearing in its trapezoidal factors.
struct HRecord {
    bool weighted_p;   // weighted halved-hexagon factor
    bool weighted_b;   // weighted defected factors
    int p_delta;       // P argument is c+d-p_delta
    int b_eps;         // third B argument is 2m+b_eps
    int t1_shift;      // T(x+b+d+2m+2a+t1_shift, c+d-1, d) ratio
    bool min_form;     // families 1-4 use the min/|m-a| tail, 5-8 the V tail
    int q2_shift;      // min-form: T(b+d+a+min+q2_shift, ...)
    int q3_shift;      // min-form: T(d+m+min+q3_shift, ...)
    int v_shift;       // V-form: V(2d+2m+2a+v_shift, b+c+v_n, c)
    int v_n;           // V-form second argument offset
    int t5_shift;      // V-form: T(x+d+2m+t5_shift, b+c+2a-2m+t5_n, c)
    int t5_n;
};

constexpr HRecord kHTable[9] = {
    {},                                                  // unused index 0
    {false, false, 0, 1, 3, true, 2, 2, 0, 0, 0, 0},     // H1
    {false, false, 1, 0, 2, true, 2, 1, 0, 0, 0, 0},     // H2
    {true, true, 0, 0, 1, true, 1, 1, 0, 0, 0, 0},       // H3
    {true, true, 1, -1, 0, true, 1, 0, 0, 0, 0, 0},      // H4
    {false, true, 0, 1, 2, false, 0, 0, 3, -1, 2, -2},   // H5
    {false, true, 1, 0, 1, false, 0, 0, 1, 0, 1, -1},    // H6
    {true, false, 0, 0, 2, false, 0, 0, 3, -1, 1, 0},    // H7
    {true, false, 1, -1, 1, false, 0, 0, 1, 0, 0, 1},    // H8
};

}  // namespace

Rat h_core(int i, long x, long b, long c, long m, long a, long d) {
    const HRecord& h = kHTable[i];
    auto P = [&](long pa, long pb, long pc) {
        return h.weighted_p ? proctor_weighted_core(pa, pb, pc) : proctor_core(pa, pb, pc);
    };
    auto B = [&](long bx, long ba, long bb, long bc) {
        return h.weighted_b ? b_weighted_core(bx, ba, bb, bc) : b_core(bx, ba, bb, bc);
    };
    long pd = c + d - h.p_delta;
    long beps = 2 * m + h.b_eps;
    Rat out = P(pd, pd, m) * B(d, a, beps, b) * B(d + x, a, beps, b + c) / B(d, a, beps, b + c);

    out *= trapezoid_T(x + 1, c + d - 1, d) / trapezoid_T(1, c + d - 1, d);
    long q1 = b + d + 2 * m + 2 * a + h.t1_shift;
    out *= trapezoid_T(x + q1, c + d - 1, d) / trapezoid_T(q1, c + d - 1, d);

    if (h.min_form) {
        long mn = std::min(a, m);
        long nn = c + std::labs(m - a) - 1;
        long mm = m - a;
        long q2 = b + d + a + mn + h.q2_shift;
        long q3 = d + m + mn + h.q3_shift;
        out *= trapezoid_T(q2, nn, mm) / trapezoid_T(x + q2, nn, mm);
        out *= trapezoid_T(q3, nn, mm) / trapezoid_T(x + q3, nn, mm);
    } else {
        long qv = 2 * d + 2 * m + 2 * a + h.v_shift;
        out *= trapezoid_V(qv, b + c + h.v_n, c) / trapezoid_V(2 * x + qv, b + c + h.v_n, c);
        long q5 = d + 2 * m + h.t5_shift;
        out *= trapezoid_T(x + q5, b + c + 2 * a - 2 * m + h.t5_n, c) /
               trapezoid_T(q5, b + c + 2 * a - 2 * m + h.t5_n, c);
    }
    return out;
}

}  // namespace detail

Rat count_P(long a, long b, long c) {
    require(a >= 0 && c >= 0 && a <= b, "count_P requires 0 <= a <= b and c >= 0");
    return detail::proctor_core(a, b, c);
}

Rat count_P_weighted(long a, long b, long c) {
    require(a >= 0 && c >= 0 && a <= b, "count_P_weighted requires 0 <= a <= b and c >= 0");
    return detail::proctor_weighted_core(a, b, c);
}

Rat count_B(long x, long a, long b, long c) {
    require(x >= 0 && a >= 0 && b >= 0 && c >= 0, "count_B requires nonnegative parameters");
    return detail::b_core(x, a, b, c);
}

Rat count_B_weighted(long x, long a, long b, long c) {
    require(x >= 0 && a >= 0 && b >= 0 && c >= 0, "count_B_weighted requires nonnegative parameters");
    return detail::b_weighted_core(x, a, b, c);
}

Rat count_H(int i, long x, long b, long c, long m, long a, long d) {
    require(i >= 1 && i <= 8, "count_H family index must be 1..8");
    require(x >= 0 && b >= 0 && c >= 0 && m >= 0 && a >= 0 && d >= 0,
            "count_H requires nonnegative parameters");
    return detail::h_core(i, x, b, c, m, a, d);
}

Rat count_HS(long x, long y, long z, long m, long a, long b) {
    require(x >= 0 && y >= 0 && z >= 0 && m >= 0 && a >= 0 && b >= 0,
            "count_HS requires nonnegative parameters");
    require(((x - z) % 2) == 0, "count_HS requires x and z of equal parity");
    using detail::h_core;
    Rat lead = pow2(y + b);
    bool a_odd = a % 2 == 1, m_odd = m % 2 == 1, x_odd = x % 2 == 1;
    if (a_odd && m_odd) {
        if (!x_odd)
            return lead * h_core(1, (x + m - 1) / 2, z / 2, y - z / 2, (m - 1) / 2, (a - 1) / 2, b) *
                   h_core(4, (x + m + 1) / 2, z / 2 - 1, y - z / 2, (m + 1) / 2, (a + 1) / 2, b);
        return lead *
               h_core(1, (x + m) / 2, (z - 1) / 2, y - (z - 1) / 2 - 1, (m - 1) / 2, (a - 1) / 2, b) *
               h_core(4, (x + m) / 2, (z - 1) / 2, y - (z - 1) / 2, (m + 1) / 2, (a + 1) / 2, b);
    }
    if (!a_odd && !m_odd) {
        if (!x_odd)
            return lead * h_core(2, (x + m) / 2, z / 2 - 1, y - z / 2, m / 2, a / 2, b) *
                   h_core(3, (x + m) / 2, z / 2, y - z / 2, m / 2, a / 2, b);
        return lead * h_core(2, (x + m - 1) / 2, (z - 1) / 2, y - (z - 1) / 2, m / 2, a / 2, b) *
               h_core(3, (x + m + 1) / 2, (z - 1) / 2, y - (z - 1) / 2 - 1, m / 2, a / 2, b);
    }
    if (!a_odd && m_odd) {
        if (!x_odd)
            return lead * h_core(5, (x + m - 1) / 2, z / 2, y - z / 2, (m - 1) / 2, a / 2, b) *
                   h_core(8, (x + m + 1) / 2, z / 2 - 1, y - z / 2, (m + 1) / 2, a / 2, b);
        return lead *
               h_core(5, (x + m) / 2, (z - 1) / 2, y - (z - 1) / 2 - 1, (m - 1) / 2, a / 2, b) *
               h_core(8, (x + m) / 2, (z - 1) / 2, y - (z - 1) / 2, (m + 1) / 2, a / 2, b);
    }
    // a odd, m even
    if (!x_odd)
        return lead * h_core(6, (x + m) / 2, z / 2 - 1, y - z / 2, m / 2, (a + 1) / 2, b) *
               h_core(7, (x + m) / 2, z / 2, y - z / 2, m / 2, (a - 1) / 2, b);
    return lead * h_core(6, (x + m - 1) / 2, (z - 1) / 2, y - (z - 1) / 2, m / 2, (a + 1) / 2, b) *
           h_core(7, (x + m + 1) / 2, (z - 1) / 2, y - (z - 1) / 2 - 1, m / 2, (a - 1) / 2, b);
}

}  // namespace loz
