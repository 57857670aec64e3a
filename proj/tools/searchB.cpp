// Dev-only: brute search for the even-b B geometry.
#include <cstdio>
#include <exception>
#include "loz/formulas.hpp"
#include "loz/oracle.hpp"
#include "loz/regions.hpp"
using namespace loz;
using loz::detail::HalvedParams;
using loz::detail::TriHole;

int main(int argc, char** argv) {
    bool weighted = argc > 1 && std::string(argv[1]) == "W";
    // knobs: se_delta, hole_center, hole_side_delta (vs 2a), hole_top_delta (vs 2c),
    //        dent_center, dent_side_delta (vs b), phase
    for (int phase = 0; phase <= 1; ++phase)
    for (int sed = -1; sed <= 1; ++sed)
    for (int hc = -2; hc <= 2; ++hc)
    for (int hsd = -1; hsd <= 1; ++hsd)
    for (int htd = -2; htd <= 1; ++htd)
    for (int dc = -2; dc <= 2; ++dc)
    for (int dsd = -1; dsd <= 1; ++dsd) {
        int bad = 0, tot = 0;
        for (long x = 0; x <= 2 && bad == 0; ++x)
        for (long a = 0; a <= 2 && bad == 0; ++a)
        for (long b = 0; b <= 3 && bad == 0; b += 1)
        for (long c = 0; c <= 3 && bad == 0; ++c) {
            
            HalvedParams p;
            p.n = x + a;
            p.ne = b + c;
            p.se = 2 * a + c + sed;
            if (weighted) p.se = 2 * a + c + sed - 0;
            p.phase = phase;
            long rows = p.ne + p.se;
            if (rows < 0) { continue; }
            p.m_hole = TriHole{hc, int(2 * a + hsd), int(2 * c + htd), true};
            p.a_hole = TriHole{dc, int(b + dsd), int(rows), false};
            if (weighted) { p.weight_center = phase == 0 ? 0 : 1; p.w_lo = 0; p.w_hi = rows; }
            Rat f, o;
            try {
                f = weighted ? count_B_weighted(x, a, b, c) : count_B(x, a, b, c);
                Region r = detail::build_halved(p);
                o = count_tilings(r);
            } catch (const std::exception&) { ++bad; break; }
            ++tot;
            if (f != o) ++bad;
        }
        if (bad == 0 && tot > 10)
            printf("CANDIDATE phase=%d sed=%d hole_center=%d hole_side=2a%+d hole_top=2c%+d dent_center=%d dent_side=b%+d (%d ok)\n",
                   phase, sed, hc, hsd, htd, dc, dsd, tot);
    }
    return 0;
}
