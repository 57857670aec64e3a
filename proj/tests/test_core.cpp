#include "doctest.h"

#include "loz/formulas.hpp"
#include "loz/oracle.hpp"
#include "loz/regions.hpp"

using namespace loz;

TEST_CASE("unit hexagon counts") {
    Region h = build_hexagon(1, 1, 1);
    CHECK(h.size() == 6);
    CHECK(is_balanced(h));
    CHECK(count_tilings(h) == 2);
    CHECK(count_matchings_recursive(dual_graph(h)) == 2);
}

TEST_CASE("hexagon 1x2x1 has 3 tilings") {
    Region h = build_hexagon(2, 1, 1);
    CHECK(count_tilings(h) == 3);
}

TEST_CASE("P region small values") {
    CHECK(count_tilings(build_P(1, 1, 1, false)) == 2);
    CHECK(count_P(1, 1, 1) == 2);
    CHECK(count_tilings(build_P(0, 2, 2, false)) == 1);
    CHECK(count_P(0, 2, 2) == 1);
    CHECK(count_tilings(build_P(2, 2, 1, false)) == 5);
    CHECK(count_P(2, 2, 1) == 5);
}

TEST_CASE("weighted P region small values") {
    CHECK(count_tilings(build_P(1, 1, 1, true)) == rat(3, 2));
    CHECK(count_P_weighted(1, 1, 1) == rat(3, 2));
}

TEST_CASE("pochhammer and trapezoid examples") {
    CHECK(pochhammer(3, 2) == 12);
    CHECK(pochhammer(Rat(7), 0) == 1);
    CHECK(pochhammer(5, -2) == rat(1, 12));
    CHECK(skipped_pochhammer(3, 3) == 105);
    CHECK(skipped_pochhammer(4, -1) == rat(1, 2));
    CHECK(trapezoid_T(1, 3, 2) == 12);
    CHECK(trapezoid_T(9, 5, 0) == 1);
    CHECK(trapezoid_T(1, 3, -2) == rat(1, 12));
    CHECK(trapezoid_V(1, 4, 2) == 1575);
    CHECK(trapezoid_V(1, 4, -2) == rat(1, 1575));
}

TEST_CASE("HS with empty shamrock is a plain hexagon") {
    Region r = build_HS(2, 1, 0, 0, 0, 0);
    CHECK(count_tilings(r) == 3);
    CHECK(count_HS(2, 1, 0, 0, 0, 0) == 3);
}

TEST_CASE("P formulas match oracle on a small grid") {
    for (long a = 0; a <= 3; ++a)
        for (long b = a; b <= 3; ++b)
            for (long c = 0; c <= 3; ++c) {
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(c);
                CHECK(count_P(a, b, c) == count_tilings(build_P(a, b, c, false)));
                CHECK(count_P_weighted(a, b, c) == count_tilings(build_P(a, b, c, true)));
            }
}
