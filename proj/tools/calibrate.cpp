// Development-only geometry calibration harness (removed before release).
#include <cstdio>
#include <exception>
#include "loz/formulas.hpp"
#include "loz/oracle.hpp"
#include "loz/regions.hpp"
using namespace loz;

int main(int argc, char** argv) {
    std::string mode = argc > 1 ? argv[1] : "B";
    int lim = argc > 2 ? atoi(argv[2]) : 2;
    int bad = 0, tot = 0;
    if (mode == "B" || mode == "BW") {
        bool w = mode == "BW";
        for (long x = 0; x <= lim + 1; ++x)
            for (long a = 0; a <= lim; ++a)
                for (long b = 0; b <= lim + 1; ++b)
                    for (long c = 0; c <= lim + 1; ++c) {
                        Rat f, o;
                        const char* stage = "formula";
                        try {
                            f = w ? count_B_weighted(x, a, b, c) : count_B(x, a, b, c);
                            stage = "build";
                            Region r = build_B(x, a, b, c, w);
                            stage = "oracle";
                            o = count_tilings(r);
                        } catch (const std::exception& e) {
                            printf("EXC  %s x=%ld a=%ld b=%ld c=%ld [%s]: %s\n", mode.c_str(), x, a, b, c, stage, e.what());
                            ++bad; ++tot; continue;
                        }
                        ++tot;
                        if (f != o) {
                            ++bad;
                            printf("MISS %s x=%ld a=%ld b=%ld c=%ld formula=%s oracle=%s\n",
                                   mode.c_str(), x, a, b, c, f.get_str().c_str(), o.get_str().c_str());
                        }
                    }
    } else if (mode[0] == 'H') {
        int i = atoi(mode.c_str() + 1);
        for (long x = 0; x <= lim; ++x)
            for (long b = 0; b <= lim; ++b)
                for (long c = 0; c <= lim; ++c)
                    for (long m = 0; m <= lim; ++m)
                        for (long a = 0; a <= lim; ++a)
                            for (long d = 0; d <= lim; ++d) {
                                Rat f, o;
                                const char* stage = "formula";
                                try {
                                    f = count_H(i, x, b, c, m, a, d);
                                    stage = "build";
                                    Region r = build_H(i, x, b, c, m, a, d);
                                    stage = "oracle";
                                    o = count_tilings(r);
                                } catch (const std::exception& e) {
                                    printf("EXC  H%d x=%ld b=%ld c=%ld m=%ld a=%ld d=%ld [%s]: %s\n", i, x, b, c, m, a, d, stage, e.what());
                                    ++bad; ++tot; continue;
                                }
                                ++tot;
                                if (f != o)
                                    printf("MISS H%d x=%ld b=%ld c=%ld m=%ld a=%ld d=%ld formula=%s oracle=%s\n",
                                           i, x, b, c, m, a, d, f.get_str().c_str(), o.get_str().c_str()),
                                        ++bad;
                            }
    } else if (mode == "HS") {
        for (long x = 0; x <= lim + 1; ++x)
            for (long y = 0; y <= lim + 1; ++y)
                for (long z = 0; z <= lim; ++z)
                    for (long m = 0; m <= lim; ++m)
                        for (long a = 0; a <= lim; ++a)
                            for (long b = 0; b <= 1; ++b) {
                                if (!hs_fits(x, y, z, m, a, b)) continue;
                                Region r = build_HS(x, y, z, m, a, b);
                                Rat o = count_tilings(r);
                                HsSplit s = hs_halves(x, y, z, m, a, b);
                                Rat prod = pow2(s.exponent) * count_tilings(s.left) * count_tilings(s.right);
                                ++tot;
                                bool miss = prod != o;
                                Rat f;
                                bool has_f = true;
                                const char* ferr = nullptr;
                                try { f = count_HS(x, y, z, m, a, b); } catch (const std::exception& e) { has_f = false; ferr = e.what(); }
                                bool fmiss = has_f && f != o;
                                if (miss || fmiss || !has_f) {
                                    ++bad;
                                    printf("%s HS x=%ld y=%ld z=%ld m=%ld a=%ld b=%ld oracle=%s split=%s k=%ld formula=%s%s\n",
                                           miss ? "SPLITMISS" : (has_f ? "FMISS" : "FEXC"), x, y, z, m, a, b,
                                           o.get_str().c_str(), prod.get_str().c_str(), s.exponent,
                                           has_f ? f.get_str().c_str() : "-", ferr ? ferr : "");
                                }
                            }
    }
    printf("== %s: %d bad / %d total\n", mode.c_str(), bad, tot);
    return bad != 0;
}
